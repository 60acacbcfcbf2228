#pragma once

// Thin RAII wrapper around FFTW3 complex transforms. Plans are created with
// FFTW_ESTIMATE so planning is deterministic run to run.

#include <complex>
#include <vector>

namespace hatom::fft {

class C2C {
public:
    // rank 1: ny == 0; rank 2: row-major nx rows of ny columns
    explicit C2C(int nx, int ny = 0);
    ~C2C();
    C2C(const C2C&) = delete;
    C2C& operator=(const C2C&) = delete;

    // In-place transform; inverse carries the 1/N normalization.
    void forward(std::complex<double>* data) const;
    void inverse(std::complex<double>* data) const;

    int size() const { return n_total_; }

private:
    void* plan_fwd_ = nullptr;
    void* plan_bwd_ = nullptr;
    int n_total_ = 0;
};

// Unnormalized DFT sample frequencies times 2*pi/(n*dx): k_j for bin j.
std::vector<double> wavenumbers(int n, double dx);

// Smallest size >= n whose factors are all 2, 3 or 5 (fast FFTW sizes).
int next_fast_size(int n);

} // namespace hatom::fft
