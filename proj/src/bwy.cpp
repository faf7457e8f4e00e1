#include "qhyp/bwy.hpp"

#include <cmath>
#include <memory>
#include <thread>

#include "qhyp/fft.hpp"

namespace qhyp {

const char* const kRootConvention =
    "factor-wise: omega^{1/n} = e(t/n) with omega = e(t), t in (-1/2,1/2]; "
    "z_i^{(n-1)/(2n)} = exp((n-1)/(2n) Log z_i); (D^{-n})^{1/n} = D^{-1}";

namespace {

long half_inverse(long n) { return static_cast<long>(inv_mod(2, n)); }

void require_odd(const RootOfUnity& q) {
    if (q.n % 2 == 0) throw DomainError("odd root-of-unity order required (use bwy_even for 4 | n)");
}

// Exponent of the unnormalized Fourier kernel entry (k, j); for odd n the
// result is a power of q, for even n a power of A = q^{1/2} for R and of q for L.
struct Kernel {
    long n, a, h;
    bool even;
    long half;
    const RootTable* tab;   // order n
    const RootTable* tab2;  // order 2n (even only)

    const Complex& entry(char kind, long k, long j) const {
        if (kind == 'L') return tab->power(a, static_cast<long long>(k) * j);
        long long d = k - j;
        if (!even) return tab->power(a, mul_mod(h, d * d, n));
        return tab2->power(half, d * d);
    }
};

CMat dense_fourier(char kind, const Kernel& K) {
    long n = K.n;
    CMat F(n, CVec(n));
    Real s = Real(1) / sqrt(Real(n));
    for (long k = 0; k < n; ++k)
        for (long j = 0; j < n; ++j) F[k][j] = K.entry(kind, k, j) * s;
    return F;
}

struct Setup {
    std::unique_ptr<RootTable> tab, tab2;
    Kernel K;
};

Setup make_setup(const RootOfUnity& q) {
    Setup s;
    s.tab = std::make_unique<RootTable>(q.n);
    s.K.n = q.n;
    s.K.a = q.reduced_a();
    s.K.even = (q.n % 2 == 0);
    s.K.tab = s.tab.get();
    s.K.tab2 = nullptr;
    s.K.half = 0;
    s.K.h = s.K.even ? 0 : half_inverse(q.n);
    if (s.K.even) {
        if (!q.half) throw DomainError("even order requires a half-exponent for q^{1/2}");
        s.tab2 = std::make_unique<RootTable>(2 * q.n);
        s.K.tab2 = s.tab2.get();
        s.K.half = *q.half;
    }
    return s;
}

CVec build_D_impl(size_t i, const LayeredData& ld, const ShapeSolution& sol, const CVec& th, const RootTable& tab,
                  long a, long n, long m) {
    long h = half_inverse(n);
    long long e = mod(static_cast<long long>(m) * ld.beta[i] - static_cast<long long>(h) * ld.eta[i], n);
    Complex c = e_turn(Rational(ld.eta[i] * (1 - static_cast<long long>(n) * n), 4 * static_cast<long long>(n))) *
                exp(-log(sol.z[i]) / Real(n));
    Complex thinv = Complex(1) / th[i];
    CVec D(n);
    Complex ck(1), P(1);
    for (long k = 0; k < n; ++k) {
        D[k] = tab.power(a, e * k) * ck * P;
        ck = ck * c;
        P = P * (Complex(1) - tab.power(a, -2LL * k) * thinv);
    }
    Complex per = ck * P;
    Real tol = ten_pow(-(static_cast<long>(std::floor(current_bits() * 0.30103)) - 25));
    if (abs(per - Complex(1)) > tol)
        throw ComputationError("D matrix periodicity check failed (branch or shape error)");
    return D;
}

struct Chain {
    std::string kinds;
    std::vector<CVec> D;
    Kernel K;
    // FFT mode: one convolver per kind (R: q^{h t^2}; L: q^{-h t^2}) plus chirp q^{h j^2}.
    std::unique_ptr<CyclicConvolver> convR, convL;
    CVec chirp;
};

void fourier_direct(const Chain& ch, char kind, const CVec& v, CVec& out, Real& t1, Real& t2) {
    long n = ch.K.n;
    for (long k = 0; k < n; ++k) {
        Complex acc(0);
        for (long j = 0; j < n; ++j) fma_into(acc, ch.K.entry(kind, k, j), v[j], t1, t2);
        out[k] = std::move(acc);
    }
}

struct RowWorker {
    const Chain& ch;
    CVec v, w;
    Real t1, t2;
    Complex tmp;
    std::unique_ptr<CyclicConvolver::Workspace> ws;

    explicit RowWorker(const Chain& c) : ch(c), v(c.K.n), w(c.K.n) {
        if (ch.convR) ws = std::make_unique<CyclicConvolver::Workspace>(ch.convR->workspace());
        else if (ch.convL) ws = std::make_unique<CyclicConvolver::Workspace>(ch.convL->workspace());
    }

    void apply_F(char kind) {
        long n = ch.K.n;
        bool use_fft = (kind == 'R') ? static_cast<bool>(ch.convR) : static_cast<bool>(ch.convL);
        if (!use_fft) {
            fourier_direct(ch, kind, v, w, t1, t2);
            std::swap(v, w);
            return;
        }
        if (kind == 'R') {
            ch.convR->apply(v, w, *ws);
        } else {
            for (long j = 0; j < n; ++j) {
                mul_into(tmp, v[j], ch.chirp[j], t1);
                std::swap(tmp, v[j]);
            }
            ch.convL->apply(v, w, *ws);
            for (long j = 0; j < n; ++j) {
                mul_into(tmp, w[j], ch.chirp[j], t1);
                std::swap(tmp, w[j]);
            }
        }
        std::swap(v, w);
    }

    void apply_D(size_t i) {
        for (long j = 0; j < ch.K.n; ++j) {
            mul_into(tmp, v[j], ch.D[i][j], t1);
            std::swap(tmp, v[j]);
        }
    }

    // Diagonal entry r of the unnormalized product.
    Complex row(long r) {
        long n = ch.K.n;
        for (long j = 0; j < n; ++j) mul_into(v[j], ch.K.entry(ch.kinds[0], r, j), ch.D[0][j], t1);
        for (size_t i = 1; i < ch.kinds.size(); ++i) {
            apply_F(ch.kinds[i]);
            apply_D(i);
        }
        return v[r];
    }
};

Complex trace_streaming(const Chain& ch, int threads) {
    long n = ch.K.n;
    std::vector<Complex> part(n);
    threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (threads == 1) {
        RowWorker rw(ch);
        for (long r = 0; r < n; ++r) part[r] = rw.row(r);
    } else {
        long bits = current_bits();
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                try {
                    ScopedPrecision sp(bits);
                    RowWorker rw(ch);
                    for (long r = t; r < n; r += threads) part[r] = rw.row(r);
                } catch (...) {
                    errs[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    Complex sum(0);
    for (long r = 0; r < n; ++r) sum += part[r];
    return sum;
}

Complex trace_dense(const Chain& ch) {
    long n = ch.K.n;
    auto factor = [&](size_t i) {
        CMat M(n, CVec(n));
        for (long k = 0; k < n; ++k)
            for (long j = 0; j < n; ++j) M[k][j] = ch.K.entry(ch.kinds[i], k, j) * ch.D[i][j];
        return M;
    };
    CMat H = factor(0);
    for (size_t i = 1; i < ch.kinds.size(); ++i) H = matmul(H, factor(i));
    Complex sum(0);
    for (long r = 0; r < n; ++r) sum += H[r][r];
    return sum;
}

Complex trace_at_current_precision(const MonodromyWord& w, const LayeredData& ld, const ShapeSolution& sol,
                                   const CVec& th, const RootOfUnity& q, long m, const TraceOptions& opts) {
    Setup s = make_setup(q);
    Chain ch;
    ch.kinds = w.letters;
    ch.K = s.K;
    long n = q.n;
    for (size_t i = 0; i < w.size(); ++i) ch.D.push_back(build_D_impl(i, ld, sol, th, *s.tab, s.K.a, n, m));
    if (opts.mode == TraceMode::fft && n > 1) {
        CVec kr(n), kl(n);
        ch.chirp.resize(n);
        for (long t = 0; t < n; ++t) {
            long long e = mul_mod(s.K.h, static_cast<long long>(t) * t % n, n);
            kr[t] = s.tab->power(s.K.a, e);
            kl[t] = s.tab->power(s.K.a, -e);
            ch.chirp[t] = kr[t];
        }
        if (w.count('R')) ch.convR = std::make_unique<CyclicConvolver>(kr);
        if (w.count('L')) ch.convL = std::make_unique<CyclicConvolver>(kl);
    }
    Complex tr = (opts.mode == TraceMode::dense) ? trace_dense(ch) : trace_streaming(ch, opts.threads);
    return tr * pow(Real(1) / sqrt(Real(n)), static_cast<long>(w.size()));
}

}  // namespace

CMat fourier_matrix(char kind, const RootOfUnity& q) {
    Setup s = make_setup(q);
    return dense_fourier(kind, s.K);
}

CVec fourier_apply(char kind, const RootOfUnity& q, const CVec& v) {
    if (static_cast<long>(v.size()) != q.n) throw DomainError("fourier_apply: vector length must equal n");
    Setup s = make_setup(q);
    CVec out(q.n);
    Real s_inv = Real(1) / sqrt(Real(q.n)), t1, t2;
    for (long k = 0; k < q.n; ++k) {
        Complex acc(0);
        for (long j = 0; j < q.n; ++j) fma_into(acc, s.K.entry(kind, k, j), v[j], t1, t2);
        out[k] = acc * s_inv;
    }
    return out;
}

Complex fourier_det_closed(char kind, const RootOfUnity& q) {
    require_odd(q);
    long n = q.n;
    int jac = jacobi_symbol(-2, n);
    Rational s = dedekind_sum(static_cast<long>(mod(-2LL * q.reduced_a(), n)), n);
    long c = (kind == 'L') ? 3 : 1;
    Complex v = e_turn(-Rational(c * n) * s / 2);
    return jac < 0 ? -v : v;
}

CVec build_D(size_t i, const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q,
             long m) {
    require_odd(q);
    LayeredData ld = layered_data(w);
    RootTable tab(q.n);
    return build_D_impl(i, ld, sol, th, tab, q.reduced_a(), q.n, m);
}

std::string trace_mode_name(TraceMode m) {
    switch (m) {
        case TraceMode::dense: return "dense";
        case TraceMode::fft: return "fft";
        default: return "streaming";
    }
}

TraceMode parse_trace_mode(const std::string& s) {
    if (s == "dense") return TraceMode::dense;
    if (s == "streaming") return TraceMode::streaming;
    if (s == "fft") return TraceMode::fft;
    throw DomainError("unknown trace mode: " + s);
}

TraceResult trace_H(const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q, long m,
                    const TraceOptions& opts) {
    require_odd(q);
    LayeredData ld = layered_data(w);
    TraceResult res;
    res.value = trace_at_current_precision(w, ld, sol, th, q, m, opts);
    res.monitor_deviation = Real(0);
    if (opts.monitor) {
        long bits = current_bits();
        long digits = static_cast<long>(bits * 0.30103);
        Complex low;
        {
            ScopedPrecision sp(std::max<long>(bits / 2, 64));
            low = trace_at_current_precision(w, ld, sol, th, q, m, opts);
        }
        Real scale = abs(res.value);
        Real dev = scale.is_zero() ? abs(low) : abs(res.value - low) / scale;
        res.monitor_deviation = dev;
        res.precision_warning = dev > ten_pow(-digits / 4);
    }
    return res;
}

Rational omega_turn(const MonodromyWord& w, const RootOfUnity& q) {
    require_odd(q);
    long n = q.n;
    Rational s = dedekind_sum(static_cast<long>(mod(-2LL * q.reduced_a(), n)), n);
    Rational t = -Rational(2 * w.count('L') + w.count('R')) * Rational(n) * s;
    int jac = jacobi_symbol(-2, n);
    if (jac < 0 && w.size() % 2 == 1) t += Rational(1, 2);
    BigInt fl = boost::multiprecision::numerator(t) / boost::multiprecision::denominator(t);
    t -= Rational(fl);
    while (t > Rational(1, 2)) t -= 1;
    while (t <= Rational(-1, 2)) t += 1;
    return t;
}

Complex det_H_closed(const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q) {
    require_odd(q);
    long n = q.n;
    RootOfUnity zinv(static_cast<long>(mod(-2LL * q.reduced_a(), n)), n);
    Complex v = e_turn(omega_turn(w, q));
    for (size_t i = 0; i < w.size(); ++i) {
        Complex D = script_D(Complex(1) / th[i], zinv);
        v = v * pow(sol.z[i], (n - 1) / 2) * pow(D, -n);
    }
    return v;
}

Complex det_H_direct(const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q,
                     long m) {
    require_odd(q);
    LayeredData ld = layered_data(w);
    Setup s = make_setup(q);
    long n = q.n;
    CMat H;
    for (size_t i = 0; i < w.size(); ++i) {
        CVec D = build_D_impl(i, ld, sol, th, *s.tab, s.K.a, n, m);
        CMat F = dense_fourier(w[i], s.K);
        for (long k = 0; k < n; ++k)
            for (long j = 0; j < n; ++j) F[k][j] = F[k][j] * D[j];
        H = (i == 0) ? F : matmul(H, F);
    }
    return determinant(H);
}

BwyResult bwy_invariant(const MonodromyWord& w, const ShapeSolution& sol, long n, long a, long m,
                        const PrecisionContext& ctx, const TraceOptions& opts) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    require_odd(q);
    CVec th = thetas(sol, n);
    TraceResult tr = trace_H(w, sol, th, q, m, opts);
    BwyResult res;
    res.trace = tr.value;
    res.precision_warning = tr.precision_warning;
    res.omega = omega_turn(w, q);
    RootOfUnity zinv(static_cast<long>(mod(-2LL * q.reduced_a(), n)), n);
    Complex f = e_turn(-res.omega / n);
    Real ex = Real(n - 1) / Real(2 * n);
    for (size_t i = 0; i < w.size(); ++i)
        f = f * exp(-log(sol.z[i]) * ex) * script_D(Complex(1) / th[i], zinv);
    res.value = tr.value * f;
    return res;
}

BwyResult bwy_invariant(const MonodromyWord& w, long n, long a, long m, const PrecisionContext& ctx,
                        const TraceOptions& opts) {
    ScopedPrecision sp(ctx);
    ShapeSolution sol = solve_geometric(w, ctx);
    return bwy_invariant(w, sol, n, a, m, ctx, opts);
}

namespace {

// b_k = q^{(k^2-k)/2} s^k (theta^{-1}; q^{-2})_k, k = 0..n-1.
CVec lr_terms(long n, long a, const RootTable& tab) {
    long h = half_inverse(n);
    Complex s = e_turn(Rational(1 - static_cast<long long>(n) * n, 4 * static_cast<long long>(n))) *
                exp(-log(e_turn(1, 6)) / Real(n));
    Complex thinv = e_turn(-1, 6 * n);
    CVec b(n);
    Complex sk(1), P(1);
    for (long k = 0; k < n; ++k) {
        long long e = mul_mod(h, mod(static_cast<long long>(k) * k - k, n), n);
        b[k] = tab.power(a, e) * sk * P;
        sk = sk * s;
        P = P * (Complex(1) - tab.power(a, -2LL * k) * thinv);
    }
    return b;
}

Complex lr_sigma(const CVec& b, const RootTable& tab, long a, long m) {
    Complex acc(0);
    Real t1, t2;
    for (size_t k = 0; k < b.size(); ++k) fma_into(acc, tab.power(a, static_cast<long long>(m) * k), b[k], t1, t2);
    return acc;
}

Complex lr_prefactor(long n, long a) {
    RootOfUnity zinv(static_cast<long>(mod(-2LL * a, n)), n);
    Complex D = script_D(e_turn(-1, 6 * n), zinv);
    return e_turn(Rational(n - 1, 12 * n)) * D * D / Real(n);
}

}  // namespace

Complex lr_closed_form(long n, long a, long m, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    require_odd(q);
    RootTable tab(n);
    CVec b = lr_terms(n, q.reduced_a(), tab);
    Complex sp_ = lr_sigma(b, tab, q.reduced_a(), m);
    Complex sm_ = lr_sigma(b, tab, q.reduced_a(), -m);
    return lr_prefactor(n, q.reduced_a()) * sp_ * sm_;
}

CVec lr_sigma_all(long n, long a, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    require_odd(q);
    RootTable tab(n);
    CVec b = lr_terms(n, q.reduced_a(), tab);
    CVec out(n);
    for (long m = 0; m < n; ++m) out[m] = lr_sigma(b, tab, q.reduced_a(), m);
    return out;
}

DescendantTable descendant_table(const MonodromyWord& w, const RootOfUnity& q, const PrecisionContext& ctx,
                                 const TraceOptions& opts) {
    ScopedPrecision sp(ctx);
    ShapeSolution sol = solve_geometric(w, ctx);
    DescendantTable t;
    t.word = w.format();
    t.q = q;
    t.ambiguity = 12 * q.n;
    if (q.n % 2 == 0) {
        t.root_convention = kEvenRootConvention;
        for (long m = 0; m < q.n / 2; ++m) t.values[m] = bwy_even(w, sol, q, m, ctx);
    } else {
        t.root_convention = kRootConvention;
        for (long m = 0; m < q.n; ++m) t.values[m] = bwy_invariant(w, sol, q.n, q.a, m, ctx, opts).value;
    }
    return t;
}

}  // namespace qhyp
