#include "qhyp/analysis.hpp"

#include <initializer_list>
#include <utility>

namespace qhyp {

namespace {

// sum_t c_t q^{e_t} with exponents e_t = u*m + v.
struct Monomial {
    long c;
    long u, v;
};

Complex poly(const RootTable& tab, long a, long m, std::initializer_list<Monomial> terms) {
    Complex s(0);
    for (const Monomial& t : terms) s += Complex(Real(t.c)) * tab.power(a, static_cast<long long>(t.u) * m + t.v);
    return s;
}

Real relative_residual(const std::vector<Complex>& terms) {
    Complex sum(0);
    Real scale(0);
    for (const Complex& t : terms) {
        sum += t;
        scale += abs(t);
    }
    return scale.is_zero() ? Real(0) : abs(sum) / scale;
}

}  // namespace

std::vector<Complex> t_recurrence_coefficients(const RootTable& tab, long a, long m) {
    auto q = [&](long u, long v) { return tab.power(a, static_cast<long long>(u) * m + v); };
    Complex one(1);
    std::vector<Complex> c(5);
    c[0] = q(8, 12) * (q(2, 5) - one) * (q(2, 5) + one) * (q(4, 10) + one) *
           poly(tab, a, m, {{-1, 4, 7}, {-1, 4, 9}, {-1, 4, 11}, {-1, 4, 13}, {1, 8, 20}, {1, 0, 0}});
    c[1] = q(4, 7) * poly(tab, a, m,
                          {{1, 4, 3},    {3, 4, 5},    {2, 4, 7},    {2, 4, 9},    {2, 4, 11},   {2, 4, 13},
                           {1, 4, 15},   {-1, 8, 8},   {-2, 8, 10},  {-3, 8, 12},  {-4, 8, 14},  {-5, 8, 16},
                           {-4, 8, 18},  {-2, 8, 20},  {-1, 8, 22},  {1, 12, 15},  {1, 12, 17},  {2, 12, 19},
                           {2, 12, 21},  {1, 12, 23},  {-1, 12, 27}, {-2, 12, 29}, {-2, 12, 31}, {-1, 12, 33},
                           {-1, 12, 35}, {1, 16, 28},  {2, 16, 30},  {4, 16, 32},  {5, 16, 34},  {4, 16, 36},
                           {3, 16, 38},  {2, 16, 40},  {1, 16, 42},  {-1, 20, 35}, {-2, 20, 37}, {-2, 20, 39},
                           {-2, 20, 41}, {-2, 20, 43}, {-3, 20, 45}, {-1, 20, 47}, {1, 24, 48},  {1, 24, 50},
                           {-1, 0, 2},   {-1, 0, 0}});
    c[2] = (q(1, 2) - one) * (q(1, 2) + one) * (q(2, 4) + one) * (q(4, 8) + one) *
           poly(tab, a, m,
                {{-1, 4, 3},   {-1, 4, 5},   {-2, 4, 7},   {-2, 4, 9},   {-1, 4, 11},  {-1, 4, 13},
                 {2, 8, 10},   {3, 8, 12},   {4, 8, 14},   {5, 8, 16},   {4, 8, 18},   {3, 8, 20},
                 {2, 8, 22},   {-1, 12, 17}, {-3, 12, 19}, {-5, 12, 21}, {-7, 12, 23}, {-7, 12, 25},
                 {-5, 12, 27}, {-3, 12, 29}, {-1, 12, 31}, {2, 16, 26},  {3, 16, 28},  {4, 16, 30},
                 {5, 16, 32},  {4, 16, 34},  {3, 16, 36},  {2, 16, 38},  {-1, 20, 35}, {-1, 20, 37},
                 {-2, 20, 39}, {-2, 20, 41}, {-1, 20, 43}, {-1, 20, 45}, {1, 24, 48},  {1, 0, 0}});
    c[3] = q(4, 7) * poly(tab, a, m,
                          {{1, 4, 3},    {2, 4, 5},    {2, 4, 7},    {2, 4, 9},    {2, 4, 11},   {3, 4, 13},
                           {1, 4, 15},   {-1, 8, 12},  {-2, 8, 14},  {-4, 8, 16},  {-5, 8, 18},  {-4, 8, 20},
                           {-3, 8, 22},  {-2, 8, 24},  {-1, 8, 26},  {-1, 12, 15}, {-1, 12, 17}, {-2, 12, 19},
                           {-2, 12, 21}, {-1, 12, 23}, {1, 12, 27},  {2, 12, 29},  {2, 12, 31},  {1, 12, 33},
                           {1, 12, 35},  {1, 16, 24},  {2, 16, 26},  {3, 16, 28},  {4, 16, 30},  {5, 16, 32},
                           {4, 16, 34},  {2, 16, 36},  {1, 16, 38},  {-1, 20, 35}, {-3, 20, 37}, {-2, 20, 39},
                           {-2, 20, 41}, {-2, 20, 43}, {-2, 20, 45}, {-1, 20, 47}, {1, 24, 48},  {1, 24, 50},
                           {-1, 0, 2},   {-1, 0, 0}});
    c[4] = q(8, 20) * (q(2, 3) - one) * (q(2, 3) + one) * (q(4, 6) + one) *
           poly(tab, a, m, {{-1, 4, 3}, {-1, 4, 5}, {-1, 4, 7}, {-1, 4, 9}, {1, 8, 12}, {1, 0, 0}});
    return c;
}

RecurrenceResult verify_sigma_recurrence(long n, long a, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    if (n % 2 == 0) throw DomainError("verify_sigma_recurrence requires odd n");
    RecurrenceResult res;
    res.max_residual = Real(0);
    // n = 1: S_m = e(m/6) sigma_0 and the relation is 2 cos(pi/3) = 1.
    if (n == 1) return res;
    a = q.reduced_a();
    CVec sigma = lr_sigma_all(n, a, ctx);
    RootTable tab(n);
    Complex theta = e_turn(1, 6 * n);
    // S_m for m = -1..n (theta^m is not n-periodic, so the window is explicit).
    std::vector<Complex> S(n + 2);
    for (long m = -1; m <= n; ++m) S[m + 1] = pow(theta, m) * sigma[mod(2LL * m, n)];
    Complex qq = tab.power(a, 1), qi = tab.power(a, -1);
    for (long m = 0; m < n; ++m) {
        Real r = relative_residual({qq * S[m + 2], (tab.power(a, -4LL * m) - qq - qi) * S[m + 1], qi * S[m]});
        res.max_residual = max(res.max_residual, r);
    }
    return res;
}

RecurrenceResult verify_T_recurrence(long n, long a, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    RootOfUnity q(a, n);
    if (n % 2 == 0) throw DomainError("verify_T_recurrence requires odd n");
    RecurrenceResult res;
    res.max_residual = Real(0);
    // n = 1: q = 1 and all five coefficients vanish.
    if (n == 1) return res;
    a = q.reduced_a();
    RootTable tab(n);
    CVec T(n);
    for (long m = 0; m < n; ++m) T[m] = lr_closed_form(n, a, 2 * m, ctx);
    Real zero = ten_pow(-(ctx.digits - 5));
    for (long m = 0; m < n; ++m) {
        std::vector<Complex> c = t_recurrence_coefficients(tab, a, m);
        if (abs(c[4]) < zero) {
            res.skipped.push_back(m);
            continue;
        }
        std::vector<Complex> terms;
        for (long j = 0; j < 5; ++j) terms.push_back(c[j] * T[(m + j) % n]);
        res.max_residual = max(res.max_residual, relative_residual(terms));
    }
    return res;
}

}  // namespace qhyp
