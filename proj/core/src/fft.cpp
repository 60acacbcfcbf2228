#include "hatom/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace hatom::fft {

C2C::C2C(int nx, int ny) {
    if (nx <= 0 || ny < 0) throw std::invalid_argument("C2C: bad transform size");
    n_total_ = (ny == 0) ? nx : nx * ny;
    // Plan on a scratch buffer; execution uses the new-array interface, so the
    // plan must be alignment-agnostic.
    std::vector<std::complex<double>> scratch(n_total_);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (ny == 0) {
        plan_fwd_ = fftw_plan_dft_1d(nx, buf, buf, FFTW_FORWARD, flags);
        plan_bwd_ = fftw_plan_dft_1d(nx, buf, buf, FFTW_BACKWARD, flags);
    } else {
        plan_fwd_ = fftw_plan_dft_2d(nx, ny, buf, buf, FFTW_FORWARD, flags);
        plan_bwd_ = fftw_plan_dft_2d(nx, ny, buf, buf, FFTW_BACKWARD, flags);
    }
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("C2C: FFTW planning failed");
}

C2C::~C2C() {
    if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void C2C::forward(std::complex<double>* data) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), buf, buf);
}

void C2C::inverse(std::complex<double>* data) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), buf, buf);
    const double s = 1.0 / n_total_;
    for (int i = 0; i < n_total_; ++i) data[i] *= s;
}

std::vector<double> wavenumbers(int n, double dx) {
    std::vector<double> k(n);
    const double dk = 2.0 * M_PI / (n * dx);
    for (int j = 0; j < n; ++j) {
        const int jj = (j <= n / 2) ? j : j - n;
        k[j] = jj * dk;
    }
    return k;
}

int next_fast_size(int n) {
    for (int m = n;; ++m) {
        int r = m;
        for (int f : {2, 3, 5}) {
            while (r % f == 0) r /= f;
        }
        if (r == 1) return m;
    }
}

} // namespace hatom::fft
