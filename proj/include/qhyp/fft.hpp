#pragma once
// Radix-2 FFT over multiprecision complex numbers and a cyclic convolver for
// arbitrary lengths (zero-padded linear convolution of the unrolled kernel).

#include "qhyp/linalg.hpp"

namespace qhyp {

// In-place transform of a power-of-two length vector; `inverse` uses conjugate
// twiddles and does not rescale.
class FFTPlan {
public:
    explicit FFTPlan(size_t size);
    size_t size() const { return m_; }
    void transform(CVec& x, bool inverse, Real& t1, Real& t2, Complex& t) const;

private:
    size_t m_;
    std::vector<size_t> rev_;
    CVec tw_;  // e(-k/m), k < m/2
};

// c[i] = sum_j K[(i - j) mod n] v[j] for a fixed kernel K of length n.
class CyclicConvolver {
public:
    explicit CyclicConvolver(const CVec& kernel);
    size_t length() const { return n_; }

    struct Workspace {
        CVec buf;
        Real t1, t2;
        Complex t;
    };
    Workspace workspace() const;
    // `out` may alias `v`.
    void apply(const CVec& v, CVec& out, Workspace& ws) const;

private:
    size_t n_;
    FFTPlan plan_;
    CVec khat_;  // transformed unrolled kernel, scaled by 1/m
};

}  // namespace qhyp
