#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace singcomb::lle {

// Iterative radix-2 complex FFT with precomputed twiddles. Sizes are
// powers of two by construction of RingGrid. Unnormalized in both
// directions; callers own the 1/N convention. Self-contained so results
// are bit-reproducible across threads and runs.
class Fft {
public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }

    // data[k] = sum_j data[j] e^{-2*pi*i*j*k/n}
    void forward(std::complex<double>* data) const;
    // data[j] = sum_k data[k] e^{+2*pi*i*j*k/n}
    void inverse(std::complex<double>* data) const;

private:
    void transform(std::complex<double>* data, bool conjugate) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddle_;  // e^{-2*pi*i*j/n}, j < n/2
};

}  // namespace singcomb::lle
