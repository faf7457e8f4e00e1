#include "qhyp/oneloop.hpp"

#include <algorithm>
#include <cmath>

namespace qhyp {

void validate_raw(RawGluingData& raw) {
    int N = raw.N();
    if (N <= 0) throw DomainError("raw gluing data is empty");
    size_t rows = static_cast<size_t>(N) + 2;
    for (const IntMat* M : {&raw.G, &raw.Gp, &raw.Gpp}) {
        if (M->size() != rows) throw DomainError("raw gluing tables must have N+2 rows");
        for (const auto& r : *M)
            if (r.size() != static_cast<size_t>(N)) throw DomainError("raw gluing tables must have N columns");
    }
    if (raw.eta.empty()) {
        raw.eta.assign(rows, 2);
        raw.eta[N] = raw.eta[N + 1] = 0;
    }
    if (raw.eta.size() != rows) throw DomainError("raw eta must have N+2 entries");
    for (const IntMat* M : {&raw.G, &raw.Gp, &raw.Gpp})
        for (int j = 0; j < N; ++j) {
            long long s = 0;
            for (int i = 0; i < N; ++i) s += (*M)[i][j];
            if (s != 2) throw DomainError("edge rows of each gluing table must sum to (2,...,2)");
        }
}

RawGluingData raw_41() {
    RawGluingData r;
    r.G = {{2, 2}, {0, 0}, {1, 0}, {1, 1}};
    r.Gp = {{1, 1}, {1, 1}, {0, 0}, {1, -1}};
    r.Gpp = {{0, 0}, {2, 2}, {0, -1}, {1, -3}};
    r.eta = {2, 2, 0, 0};
    return r;
}

ShapeKind parse_shape_kind(const std::string& s) {
    if (s == "z") return ShapeKind::z;
    if (s == "zp" || s == "z'") return ShapeKind::zp;
    if (s == "zpp" || s == "z''") return ShapeKind::zpp;
    throw DomainError("unknown shape label: " + s);
}

std::optional<std::pair<IntVec, IntVec>> find_flattening(const IntMat& A, const IntMat& B, const IntVec& nu,
                                                          int max_radius) {
    size_t N = A.size();
    auto Binv = inverse(to_rational(B));
    if (!Binv) return std::nullopt;
    RatMat BiA = matmul(*Binv, to_rational(A));
    RatVec base(N, Rational(0));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) base[i] += (*Binv)[i][j] * nu[j];
    for (int r = 1; r <= max_radius; ++r) {
        std::optional<std::pair<IntVec, IntVec>> best;
        long long best_norm = 0;
        IntVec fp(N, -r);
        while (true) {
            RatVec f = base;
            for (size_t i = 0; i < N; ++i)
                for (size_t j = 0; j < N; ++j)
                    if (fp[j]) f[i] -= BiA[i][j] * fp[j];
            if (is_integral(f)) {
                IntVec fi = to_integer(f);
                long long norm = 0;
                for (size_t i = 0; i < N; ++i) norm += fi[i] * fi[i] + fp[i] * fp[i];
                if (!best || norm < best_norm) {
                    best = std::make_pair(fp, fi);
                    best_norm = norm;
                }
            }
            size_t k = 0;
            while (k < N && fp[k] == r) fp[k++] = -r;
            if (k == N) break;
            ++fp[k];
        }
        if (best) return best;
    }
    return std::nullopt;
}

NZDatum reduce_gluing(const RawGluingData& raw0, ShapeKind eliminate, int drop_edge, Curve keep,
                      bool halve_longitude) {
    RawGluingData raw = raw0;
    validate_raw(raw);
    int N = raw.N();
    if (drop_edge < 1 || drop_edge > N) throw DomainError("drop_edge must be in 1..N");
    if (keep == Curve::custom) throw DomainError("keep_curve must be the meridian or the longitude");
    std::vector<int> rows;
    for (int i = 0; i < N; ++i)
        if (i + 1 != drop_edge) rows.push_back(i);
    rows.push_back(keep == Curve::meridian ? N : N + 1);
    // X pairs with the datum's z', Y with its z, W is eliminated via z z' z'' = -1.
    const IntMat *X, *Y, *W;
    switch (eliminate) {
        case ShapeKind::zpp: X = &raw.Gp; Y = &raw.G; W = &raw.Gpp; break;
        case ShapeKind::zp: X = &raw.G; Y = &raw.Gpp; W = &raw.Gp; break;
        default: X = &raw.Gpp; Y = &raw.Gp; W = &raw.G; break;
    }
    NZDatum nz;
    nz.N = N;
    nz.A = int_zeros(N, N);
    nz.B = int_zeros(N, N);
    nz.nu.assign(N, 0);
    nz.curve = keep;
    for (int r = 0; r < N; ++r) {
        int src = rows[r];
        long long wsum = 0;
        for (int j = 0; j < N; ++j) {
            nz.A[r][j] = (*X)[src][j] - (*W)[src][j];
            nz.B[r][j] = (*Y)[src][j] - (*W)[src][j];
            wsum += (*W)[src][j];
        }
        nz.nu[r] = raw.eta[src] - wsum;
    }
    if (keep == Curve::longitude && halve_longitude) {
        int r = N - 1;
        bool even = nz.nu[r] % 2 == 0;
        for (int j = 0; j < N; ++j) even = even && nz.A[r][j] % 2 == 0 && nz.B[r][j] % 2 == 0;
        if (!even) throw DomainError("longitude row is not divisible by 2");
        for (int j = 0; j < N; ++j) {
            nz.A[r][j] /= 2;
            nz.B[r][j] /= 2;
        }
        nz.nu[r] /= 2;
    }
    if (scaled_unimodular(nz.B, 1))
        nz.d = 1;
    else if (scaled_unimodular(nz.B, 2))
        nz.d = 2;
    else
        throw DomainError("(1/d) B is not unimodular for d in {1, 2}");
    auto fl = find_flattening(nz.A, nz.B, nz.nu);
    if (!fl) throw DomainError("no integer flattening found");
    nz.fp = fl->first;
    nz.f = fl->second;
    validate_nz(nz);
    return nz;
}

std::pair<CVec, CVec> datum_shapes(const CVec& z, ShapeKind eliminated) {
    size_t N = z.size();
    CVec zp(N), zpp(N);
    for (size_t i = 0; i < N; ++i) {
        zp[i] = Complex(1) / (Complex(1) - z[i]);
        zpp[i] = Complex(1) - Complex(1) / z[i];
    }
    switch (eliminated) {
        case ShapeKind::zpp: return {zp, z};
        case ShapeKind::zp: return {z, zpp};
        default: return {zpp, zp};
    }
}

Complex state_sum_prefactor(const NZDatum& nz, const CVec& zp, const CVec& z, const RootOfUnity& zeta) {
    long n = zeta.n;
    size_t N = static_cast<size_t>(nz.N);
    RootOfUnity zinv(static_cast<long>(mod(-static_cast<long long>(zeta.reduced_a()), n)), n);
    Complex pref = pow(Real(1) / sqrt(Real(n)), static_cast<long>(N));
    Complex M(1);
    for (size_t i = 0; i < N; ++i) {
        pref = pref * script_D(Complex(1) / root(zp[i], n), zinv);
        M = M * pow(z[i], nz.fp[i]) * pow(zp[i], -nz.f[i]);
    }
    return pref * exp(-log(M) * (Real(n - 1) / Real(2 * n)));
}

Complex one_loop_ratio_via_trace(const MonodromyWord& w, const ShapeSolution& sol, long n, long a, long m,
                                 const PrecisionContext& ctx, const TraceOptions& opts, bool* precision_warning) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    if (n % 2 == 0) throw DomainError("one_loop_ratio_via_trace requires odd n");
    RootOfUnity zeta(static_cast<long>(mod(2LL * q.reduced_a(), n)), n);
    CVec th = thetas(sol, n);
    TraceResult tr = trace_H(w, sol, th, q, m, opts);
    if (precision_warning) *precision_warning = tr.precision_warning;
    // n^{N/2} tr H equals the state sum
    Complex sum = tr.value * pow(sqrt(Real(n)), static_cast<long>(w.size()));
    return state_sum_prefactor(nz_longitude(w), sol.zp, sol.z, zeta) * sum;
}

StateSumResult state_sum(const NZDatum& nz, const CVec& zp, const CVec& z, const RootOfUnity& zeta, long m,
                         const PrecisionContext& ctx, bool allow_large) {
    ScopedPrecision sp(ctx);
    validate_nz(nz);
    long n = zeta.n;
    if (n % 2 == 0) throw DomainError("state_sum requires odd order");
    size_t N = static_cast<size_t>(nz.N);
    if (std::pow(static_cast<double>(n), static_cast<double>(N)) > kStateSumDefaultLimit && !allow_large)
        throw DomainError("state sum of size n^N exceeds 1e6; pass the override to force it");
    auto Binv = inverse(to_rational(nz.B));
    if (!Binv) throw ComputationError("B is singular");
    RatMat dBi = *Binv;
    for (auto& r : dBi)
        for (auto& x : r) x *= nz.d;
    if (!is_integral(dBi)) throw ComputationError("d B^{-1} is not integral");
    IntMat dB = to_integer(dBi);
    IntMat Y = matmul(dB, nz.A);
    IntMat X = Y;
    for (auto& r : X)
        for (auto& x : r) x *= nz.d;
    IntVec w = matvec(dB, nz.nu);
    IntVec e(N);
    for (size_t i = 0; i < N; ++i) e[i] = dB[i][N - 1];
    long a = zeta.reduced_a();
    long long h = inv_mod(2, n);
    RootTable tab(n);
    Complex zq = tab.power(a, 1);

    CVec th(N);
    for (size_t i = 0; i < N; ++i) th[i] = root(zp[i], n);
    // theta_i^{-p} for p in [lo_i, hi_i]
    std::vector<CVec> thpow(N);
    std::vector<long long> lo(N), hi(N);
    for (size_t i = 0; i < N; ++i) {
        lo[i] = hi[i] = 0;
        for (size_t j = 0; j < N; ++j) {
            lo[i] += std::min<long long>(0, Y[i][j]) * (n - 1);
            hi[i] += std::max<long long>(0, Y[i][j]) * (n - 1);
        }
        size_t len = static_cast<size_t>(hi[i] - lo[i] + 1);
        thpow[i].resize(len);
        Complex tinv = Complex(1) / th[i];
        Complex start = pow(th[i], -lo[i]);
        thpow[i][0] = start;
        for (size_t p = 1; p < len; ++p) thpow[i][p] = thpow[i][p - 1] * tinv;
    }
    // 1 / (zeta theta_i^{-1}; zeta)_{d k}
    std::vector<CVec> ipoch(N, CVec(n));
    for (size_t i = 0; i < N; ++i) {
        Complex x = zq / th[i];
        Complex P(1);
        long upto = nz.d * (n - 1);
        CVec full(upto + 1);
        for (long j = 0; j <= upto; ++j) {
            full[j] = P;
            P = P * (Complex(1) - tab.power(a, j) * x);
        }
        for (long k = 0; k < n; ++k) {
            if (abs(full[nz.d * k]) < singular_threshold()) throw ComputationError("singular Pochhammer factor");
            ipoch[i][k] = Complex(1) / full[nz.d * k];
        }
    }

    Complex sum(0), term, tmp;
    Real t1;
    IntVec k(N, 0);
    IntVec Yk(N);
    while (true) {
        long long E = 0, sgn = 0;
        for (size_t i = 0; i < N; ++i) {
            long long yi = 0, xi = 0;
            for (size_t j = 0; j < N; ++j) {
                yi += Y[i][j] * k[j];
                xi += X[i][j] * k[j];
            }
            Yk[i] = yi;
            E += k[i] * (xi + w[i] - 2LL * m * e[i]);
            sgn += k[i] * w[i];
        }
        E = mul_mod(h, mod(E, n), n);
        term = tab.power(a, E);
        if (mod(sgn, 2)) term = -term;
        for (size_t i = 0; i < N; ++i) {
            mul_into(tmp, term, thpow[i][static_cast<size_t>(Yk[i] - lo[i])], t1);
            mul_into(term, tmp, ipoch[i][k[i]], t1);
        }
        sum += term;
        size_t idx = N;
        while (idx-- > 0) {
            if (++k[idx] < n) break;
            k[idx] = 0;
        }
        if (idx == static_cast<size_t>(-1)) break;
    }

    StateSumResult res;
    res.sum = sum;
    res.ratio = state_sum_prefactor(nz, zp, z, zeta) * sum;
    res.tau = res.ratio * tau_one(nz, zp, z);
    res.n = n;
    res.a = a;
    res.m = m;
    res.ambiguity = 12 * n;
    return res;
}

namespace {

// (zeta theta^{-1}; zeta)_j for j = 0..upto with theta = e(1/(6n)).
CVec poch41(const RootTable& tab, long a, long n, long upto) {
    Complex x = tab.power(a, 1) * e_turn(-1, 6 * n);
    CVec P(upto + 1);
    Complex acc(1);
    for (long j = 0; j <= upto; ++j) {
        P[j] = acc;
        acc = acc * (Complex(1) - tab.power(a, j) * x);
    }
    return P;
}

Complex script_D_41(long n, long a) {
    RootOfUnity zinv(static_cast<long>(mod(-static_cast<long long>(a), n)), n);
    return script_D(e_turn(-1, 6 * n), zinv);
}

}  // namespace

Complex tau_41_meridian(long n, long a, long m, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity zeta(a, n);
    if (n % 2 == 0) throw DomainError("tau_41_meridian requires odd n");
    a = zeta.reduced_a();
    RootTable tab(n);
    CVec P = poch41(tab, a, n, n - 1);
    Complex th = e_turn(1, 6 * n);
    CVec cp(n), cm(n);
    Complex thk(1);
    for (long k = 0; k < n; ++k) {
        Complex base = thk / P[k];
        cp[k] = tab.power(a, static_cast<long long>(m) * k) * base;
        cm[k] = tab.power(a, -static_cast<long long>(m) * k) * base;
        thk = thk * th;
    }
    Complex sum(0);
    Real t1, t2;
    for (long k = 0; k < n; ++k) {
        Complex inner(0);
        for (long l = 0; l < n; ++l) fma_into(inner, tab.power(a, -static_cast<long long>(k) * l), cm[l], t1, t2);
        fma_into(sum, cp[k], inner, t1, t2);
    }
    Complex D = script_D_41(n, a);
    return D * D * sum / (Real(n) * sqrt(sqrt(Real(3))));
}

Complex tau_41_longitude(long n, long a, long m, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity zeta(a, n);
    if (n % 2 == 0) throw DomainError("tau_41_longitude requires odd n");
    a = zeta.reduced_a();
    RootTable tab(n);
    long long h = inv_mod(2, n);
    CVec P = poch41(tab, a, n, 2 * (n - 1));
    Complex thinv = e_turn(-1, 6 * n);
    auto s = [&](long mm) {
        Complex acc(0), thk(1);
        for (long k = 0; k < n; ++k) {
            long long E = mod(static_cast<long long>(k) * k + h * k + static_cast<long long>(mm) * k, n);
            Complex t = tab.power(a, E) * thk / P[2 * k];
            if (k % 2) t = -t;
            acc += t;
            thk = thk * thinv;
        }
        return acc;
    };
    Complex D = script_D_41(n, a);
    Complex den = e_turn(Rational(1 - n, 12 * n)) * (Real(n) * sqrt(Real(3)));
    return D * D * s(m) * s(-m) / den;
}

}  // namespace qhyp
