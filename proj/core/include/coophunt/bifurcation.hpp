#ifndef COOPHUNT_BIFURCATION_HPP
#define COOPHUNT_BIFURCATION_HPP

#include <optional>
#include <string>

#include "coophunt/temporal.hpp"

namespace coophunt {

enum class ScanParameter { Alpha, Gamma, C };

const char* to_string(ScanParameter p);

/// Returns a copy of p with the scanned parameter replaced.
ModelParams with_parameter(const ModelParams& p, ScanParameter which, double value);

enum class ThresholdKind { Hopf, Transcritical, SaddleNode };

struct ThresholdResult {
    ScanParameter parameter;
    double value = 0.0;
    ThresholdKind kind = ThresholdKind::Hopf;
    double residual = 0.0;  // |defining equation| at the returned value
};

/// Root of D1(param) = -tr J(E*) over the bracket, validated by D2 > 0.
/// Throws when D1 does not change sign, when the interior equilibrium is
/// not unique somewhere in the bracket, or when D2 <= 0 at the root.
ThresholdResult hopf_threshold(const ModelParams& p, ScanParameter which,
                               std::pair<double, double> bracket);

/// Closed-form stability exchange of the prey-free state: solves
/// m*gamma^2 = c*beta*(gamma + alpha*beta) for c or gamma.
ThresholdResult transcritical_threshold(const ModelParams& p, ScanParameter which);

/// Scans alpha for changes in the interior-root count of R and refines each
/// change to the double-root locus R = R' = 0.
std::vector<ThresholdResult> saddle_node_scan(const ModelParams& p,
                                              std::pair<double, double> alpha_range,
                                              int n);

enum class Criticality { Supercritical, Subcritical };

struct CriticalityResult {
    std::optional<Criticality> value;  // empty = inconclusive
    double amplitude_slope = 0.0;      // log-log slope of cycle amplitude vs offset
    std::string note;
};

/// Classifies a Hopf point from cycle geometry: amplitude ~ sqrt(offset) on
/// the unstable side marks a supercritical point, an unstable cycle found by
/// time reversal on the stable side a subcritical one.
CriticalityResult hopf_criticality(const ModelParams& p, const ThresholdResult& th,
                                   double side_offset);

struct BranchPoint {
    double parameter;
    int branch_id;  // 0..2 boundary (E0,E1,E2), 3+ interior (sorted by u)
    State2 point;
    StabilityClass stability;
    bool has_cycle = false;
    double cycle_u_min = 0, cycle_u_max = 0, cycle_v_min = 0, cycle_v_max = 0;
};

struct BranchDiagram {
    ScanParameter parameter;
    std::vector<BranchPoint> points;
    std::vector<std::string> warnings;  // per-point failures, scan continues

    std::string to_csv() const;
};

struct BranchOptions {
    bool attach_cycles = true;
    double cycle_t_end = 8000.0;
    bool refine_near_flips = true;
    int workers = 1;
};

BranchDiagram branch_diagram(const ModelParams& p, ScanParameter which,
                             std::pair<double, double> range, int n,
                             const BranchOptions& opts = {});

}  // namespace coophunt

#endif
