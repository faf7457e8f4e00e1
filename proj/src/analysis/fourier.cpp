#include "qhyp/analysis.hpp"

namespace qhyp {

FourierCheckResult fourier_check_41(long n, long a, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    if (n % 2 == 0) throw DomainError("fourier_check_41 requires odd n");
    a = q.reduced_a();
    FourierCheckResult res;
    res.n = n;
    res.a = a;
    Real tol = ten_pow(-(ctx.digits - 15));

    // T_{LR,l}(q) = trace_l * F with F the l-independent det-root factor.
    MonodromyWord w = parse_word("LR");
    ShapeSolution sol = solve_geometric(w, ctx);
    CVec T(n);
    Complex factor;
    for (long l = 0; l < n; ++l) {
        BwyResult b = bwy_invariant(w, sol, n, a, l, ctx);
        if (l == 0) factor = b.value / b.trace;
        T[l] = b.trace * factor;
    }

    RootTable tab(n);
    Real inv_sqrt = Real(1) / sqrt(Real(n));
    auto dft = [&](const CVec& v, long sign) {
        CVec out(n);
        Real t1, t2;
        for (long m = 0; m < n; ++m) {
            Complex acc(0);
            for (long l = 0; l < n; ++l)
                fma_into(acc, tab.power(a, sign * 2LL * m * l), v[l], t1, t2);
            out[m] = acc * inv_sqrt;
        }
        return out;
    };
    CVec lhs = dft(T, 1);
    CVec back = dft(lhs, -1);
    Real num(0), den(0);
    for (long l = 0; l < n; ++l) {
        num += norm(back[l] - T[l]);
        den += norm(T[l]);
    }
    res.unitarity_residual = den.is_zero() ? Real(0) : sqrt(num / den);

    long a2 = static_cast<long>(mod(2LL * a, n));
    Real fourth_root3 = sqrt(sqrt(Real(3)));
    CVec rhs(n);
    Real scale(0);
    for (long m = 0; m < n; ++m) {
        rhs[m] = tau_41_meridian(n, a2, m, ctx) * fourth_root3;
        scale = max(scale, abs(rhs[m]));
    }
    Real zero_level = tol * scale;
    res.max_residual = Real(0);
    res.passed = res.unitarity_residual < ten_pow(-(ctx.digits - 10));
    for (long m = 0; m < n; ++m) {
        FourierRow row;
        row.m = m;
        row.lhs = lhs[m];
        row.rhs = rhs[m];
        if (abs(lhs[m]) < zero_level && abs(rhs[m]) < zero_level) {
            row.zero_match = true;
            row.residual = scale.is_zero() ? Real(0) : max(abs(lhs[m]), abs(rhs[m])) / scale;
            row.ok = true;
        } else if (abs(rhs[m]) < zero_level) {
            row.residual = Real(1);
        } else {
            RootMatch rm = equal_up_to_root(lhs[m], rhs[m], 12 * n, tol);
            row.root_index = rm.index;
            row.residual = rm.deviation;
            row.ok = rm.ok;
        }
        res.max_residual = max(res.max_residual, row.residual);
        res.passed = res.passed && row.ok;
        res.rows.push_back(row);
    }
    return res;
}

}  // namespace qhyp
