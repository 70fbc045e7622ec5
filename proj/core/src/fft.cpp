#include "coophunt/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace coophunt {

namespace {
// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

SpectralWorkspace::SpectralWorkspace(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("SpectralWorkspace: n >= 2 required");
    real_buf_ = fftw_alloc_real(n);
    cplx_buf_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft_r2c_1d(n, real_buf_, static_cast<fftw_complex*>(cplx_buf_),
                                     FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_c2r_1d(n, static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                     FFTW_ESTIMATE);
    if (!plan_fwd_ || !plan_inv_) throw std::runtime_error("FFTW plan creation failed");
}

SpectralWorkspace::~SpectralWorkspace() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    fftw_free(real_buf_);
    fftw_free(cplx_buf_);
}

void SpectralWorkspace::forward(std::span<const double> in,
                                std::span<std::complex<double>> out) {
    if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != num_modes())
        throw std::invalid_argument("SpectralWorkspace::forward: size mismatch");
    std::memcpy(real_buf_, in.data(), sizeof(double) * n_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(out.data(), cplx_buf_, sizeof(fftw_complex) * num_modes());
}

void SpectralWorkspace::inverse(std::span<const std::complex<double>> in,
                                std::span<double> out) {
    if (static_cast<int>(in.size()) != num_modes() || static_cast<int>(out.size()) != n_)
        throw std::invalid_argument("SpectralWorkspace::inverse: size mismatch");
    std::memcpy(cplx_buf_, in.data(), sizeof(fftw_complex) * num_modes());
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    const double inv_n = 1.0 / n_;
    for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * inv_n;
}

void SpectralWorkspace::apply_symbol(std::span<const double> in,
                                     std::span<const double> symbol,
                                     std::span<double> out) {
    if (static_cast<int>(symbol.size()) != num_modes())
        throw std::invalid_argument("SpectralWorkspace::apply_symbol: symbol size mismatch");
    std::memcpy(real_buf_, in.data(), sizeof(double) * n_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    auto* c = static_cast<fftw_complex*>(cplx_buf_);
    for (int m = 0; m < num_modes(); ++m) {
        c[m][0] *= symbol[m];
        c[m][1] *= symbol[m];
    }
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    const double inv_n = 1.0 / n_;
    for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * inv_n;
}

}  // namespace coophunt
