#ifndef COOPHUNT_GRID_HPP
#define COOPHUNT_GRID_HPP

#include <cmath>
#include <stdexcept>

namespace coophunt {

/// Uniform periodic grid on [-L, L) with n cells.
struct Grid1D {
    double half_length = 100.0;  // L
    int n = 2048;

    void validate() const {
        if (!(half_length > 0.0)) throw std::invalid_argument("Grid1D: L must be positive");
        if (n < 64) throw std::invalid_argument("Grid1D: n >= 64 required");
    }

    double dx() const { return 2.0 * half_length / n; }
    double x(int j) const { return -half_length + j * dx(); }
    /// Wavenumber of the m-th half-complex Fourier mode (m = 0 .. n/2).
    double wavenumber(int m) const { return M_PI * m / half_length; }
    int num_modes() const { return n / 2 + 1; }
};

}  // namespace coophunt

#endif
