#include "qhyp/fft.hpp"

namespace qhyp {

FFTPlan::FFTPlan(size_t size) : m_(size), rev_(size) {
    if (size == 0 || (size & (size - 1)) != 0) throw DomainError("FFT size must be a power of two");
    size_t bits = 0;
    while ((size_t(1) << bits) < size) ++bits;
    for (size_t i = 0; i < size; ++i) {
        size_t r = 0;
        for (size_t b = 0; b < bits; ++b)
            if (i & (size_t(1) << b)) r |= size_t(1) << (bits - 1 - b);
        rev_[i] = r;
    }
    RootTable tab(static_cast<long>(size));
    tw_.resize(size / 2);
    for (size_t k = 0; k < size / 2; ++k) tw_[k] = tab.power(-1, static_cast<long long>(k));
}

void FFTPlan::transform(CVec& x, bool inverse, Real& t1, Real& t2, Complex& t) const {
    for (size_t i = 0; i < m_; ++i)
        if (i < rev_[i]) std::swap(x[i], x[rev_[i]]);
    for (size_t len = 2; len <= m_; len <<= 1) {
        size_t half = len / 2, stride = m_ / len;
        for (size_t s = 0; s < m_; s += len) {
            for (size_t k = 0; k < half; ++k) {
                Complex& a = x[s + k];
                Complex& b = x[s + k + half];
                if (k == 0) {
                    mpfr_sub(t.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
                    mpfr_sub(t.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
                    mpfr_add(a.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
                    mpfr_add(a.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
                    mpfr_swap(b.re.get(), t.re.get());
                    mpfr_swap(b.im.get(), t.im.get());
                    continue;
                }
                const Complex& w = tw_[k * stride];
                // t = w * b (conjugate twiddle for the inverse)
                mpfr_mul(t1.get(), w.re.get(), b.re.get(), MPFR_RNDN);
                mpfr_mul(t2.get(), w.im.get(), b.im.get(), MPFR_RNDN);
                if (inverse)
                    mpfr_add(t.re.get(), t1.get(), t2.get(), MPFR_RNDN);
                else
                    mpfr_sub(t.re.get(), t1.get(), t2.get(), MPFR_RNDN);
                mpfr_mul(t1.get(), w.re.get(), b.im.get(), MPFR_RNDN);
                mpfr_mul(t2.get(), w.im.get(), b.re.get(), MPFR_RNDN);
                if (inverse)
                    mpfr_sub(t.im.get(), t1.get(), t2.get(), MPFR_RNDN);
                else
                    mpfr_add(t.im.get(), t1.get(), t2.get(), MPFR_RNDN);
                mpfr_sub(b.re.get(), a.re.get(), t.re.get(), MPFR_RNDN);
                mpfr_sub(b.im.get(), a.im.get(), t.im.get(), MPFR_RNDN);
                mpfr_add(a.re.get(), a.re.get(), t.re.get(), MPFR_RNDN);
                mpfr_add(a.im.get(), a.im.get(), t.im.get(), MPFR_RNDN);
            }
        }
    }
}

namespace {
size_t pow2_at_least(size_t x) {
    size_t m = 1;
    while (m < x) m <<= 1;
    return m;
}
}  // namespace

CyclicConvolver::CyclicConvolver(const CVec& kernel)
    : n_(kernel.size()), plan_(pow2_at_least(kernel.empty() ? 1 : 2 * kernel.size() - 1)) {
    if (n_ == 0) throw DomainError("empty convolution kernel");
    size_t m = plan_.size();
    khat_.assign(m, Complex(0));
    // Offsets s = t - (n-1) for t = 0..2n-2.
    for (size_t t = 0; t + 1 < 2 * n_; ++t) {
        long s = static_cast<long>(t) - static_cast<long>(n_ - 1);
        khat_[t] = kernel[static_cast<size_t>(mod(s, static_cast<long long>(n_)))];
    }
    Real t1, t2;
    Complex tmp;
    plan_.transform(khat_, false, t1, t2, tmp);
    Real inv = Real(1) / Real(static_cast<long>(m));
    for (auto& c : khat_) c = c * inv;
}

CyclicConvolver::Workspace CyclicConvolver::workspace() const {
    Workspace ws;
    ws.buf.assign(plan_.size(), Complex(0));
    return ws;
}

void CyclicConvolver::apply(const CVec& v, CVec& out, Workspace& ws) const {
    size_t m = plan_.size();
    if (ws.buf.size() != m) ws.buf.assign(m, Complex(0));
    for (size_t j = 0; j < m; ++j) {
        if (j < n_) {
            mpfr_set(ws.buf[j].re.get(), v[j].re.get(), MPFR_RNDN);
            mpfr_set(ws.buf[j].im.get(), v[j].im.get(), MPFR_RNDN);
        } else {
            mpfr_set_zero(ws.buf[j].re.get(), 1);
            mpfr_set_zero(ws.buf[j].im.get(), 1);
        }
    }
    plan_.transform(ws.buf, false, ws.t1, ws.t2, ws.t);
    for (size_t j = 0; j < m; ++j) {
        mul_into(ws.t, ws.buf[j], khat_[j], ws.t1);
        mpfr_swap(ws.t.re.get(), ws.buf[j].re.get());
        mpfr_swap(ws.t.im.get(), ws.buf[j].im.get());
    }
    plan_.transform(ws.buf, true, ws.t1, ws.t2, ws.t);
    if (out.size() != n_) out.resize(n_);
    for (size_t i = 0; i < n_; ++i) out[i] = ws.buf[i + n_ - 1];
}

}  // namespace qhyp
