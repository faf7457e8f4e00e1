#include "qhyp/bwy.hpp"

#include <cmath>

namespace qhyp {

const char* const kEvenRootConvention =
    "principal n-th root of det H, with det H the product of the dense Fourier determinants and the D diagonals";

Complex bwy_even(const MonodromyWord& w, const ShapeSolution& sol, const RootOfUnity& q, long m,
                 const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    long n = q.n;
    if (n % 4 != 0) throw DomainError("even-order invariant requires 4 | n (n = 2 mod 4 gives no new invariants)");
    if (!q.half) throw DomainError("even order requires a half-exponent for q^{1/2}");
    LayeredData ld = layered_data(w);
    size_t N = w.size();
    long a = q.reduced_a();
    RootTable tab(n), tab2(2 * n);
    long mm = static_cast<long>(mod(m, n / 2));
    // p = (-1)^{n/2} q^{2m}
    Complex p = tab.power(a, 2LL * mm);
    if ((n / 2) % 2) p = -p;
    CVec u(N), theta(N);
    for (size_t i = 0; i < N; ++i) {
        u[i] = root(-sol.zp[i], n);
        theta[i] = -tab.power(a, 1) * p * u[i] * u[i];
    }
    Real inv_sqrt = Real(1) / sqrt(Real(n));
    Real tol = ten_pow(-(static_cast<long>(std::floor(current_bits() * 0.30103)) - 25));
    CMat H;
    Complex det(1);
    for (size_t i = 0; i < N; ++i) {
        Complex d = (ld.ell[(i + 1) % N] ? p : Complex(1));
        for (size_t j = 0; j < N; ++j) d = d * pow(u[j], ld.Q[i][j]);
        CVec D(n);
        Complex dk(1), P(1), thinv = Complex(1) / theta[i];
        for (long k = 0; k < n; ++k) {
            D[k] = dk * P;
            det = det * D[k];
            dk = dk * d;
            P = P * (Complex(1) - tab.power(a, -2LL * k) * thinv);
        }
        if (abs(dk * P - Complex(1)) > tol)
            throw ComputationError("even-order D matrix periodicity check failed");
        CMat F(n, CVec(n));
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < n; ++c) {
                long long dd = r - c;
                const Complex& e = (w[i] == 'L') ? tab.power(a, static_cast<long long>(r) * c)
                                                 : tab2.power(*q.half, dd * dd);
                F[r][c] = e * inv_sqrt;
            }
        det = det * determinant(F);
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < n; ++c) F[r][c] = F[r][c] * D[c];
        H = (i == 0) ? F : matmul(H, F);
    }
    Complex tr(0);
    for (long r = 0; r < n; ++r) tr += H[r][r];
    return tr / root(det, n);
}

Complex bwy_even(const MonodromyWord& w, long n, long a, long half, long m, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    ShapeSolution sol = solve_geometric(w, ctx);
    return bwy_even(w, sol, RootOfUnity(a, n, half), m, ctx);
}

}  // namespace qhyp
