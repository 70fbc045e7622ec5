#ifndef COOPHUNT_FFT_HPP
#define COOPHUNT_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace coophunt {

/// Real <-> half-complex transform pair of fixed size with owned, aligned
/// buffers. The inverse is normalized (round trip is the identity up to
/// round-off). Each instance is single-threaded; make one per worker.
class SpectralWorkspace {
  public:
    explicit SpectralWorkspace(int n);
    ~SpectralWorkspace();

    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    int size() const { return n_; }
    int num_modes() const { return n_ / 2 + 1; }

    void forward(std::span<const double> in, std::span<std::complex<double>> out);
    void inverse(std::span<const std::complex<double>> in, std::span<double> out);

    /// Pointwise spectral filter: out = ifft(symbol .* fft(in)).
    void apply_symbol(std::span<const double> in, std::span<const double> symbol,
                      std::span<double> out);

  private:
    int n_;
    double* real_buf_;
    void* cplx_buf_;  // fftw_complex*
    void* plan_fwd_;
    void* plan_inv_;
};

}  // namespace coophunt

#endif
