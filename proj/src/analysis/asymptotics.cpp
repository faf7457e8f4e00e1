#include "qhyp/analysis.hpp"

#include <gmp.h>

namespace qhyp {

namespace {

BigInt nearest_integer(const Real& x) {
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, x.get(), MPFR_RNDN);
    char* s = mpz_get_str(nullptr, 10, z);
    BigInt out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, std::char_traits<char>::length(s) + 1);
    mpz_clear(z);
    return out;
}

// The root of `value` of the given order closest to `guess`.
Complex nearest_root(const Complex& value, long order, const Complex& guess) {
    Complex base = root(value, order);
    Complex best = base;
    for (long j = 1; j < order; ++j) {
        Complex c = base * e_turn(j, order);
        if (abs(c - guess) < abs(best - guess)) best = c;
    }
    return best;
}

Complex sqrt_m7() { return Complex(Real(0), sqrt(Real(7))); }

AsymptoticReport recover(const std::string& word, const std::vector<Sample>& samples, int terms, const Complex& v,
                         const Complex& tau1, const Complex& s_over_h0, long d) {
    ExtrapolationOptions opts;
    opts.terms = terms;
    opts.v_reference = v;
    AsymptoticReport rep;
    rep.word = word;
    rep.fit = extrapolate(samples, opts);
    rep.v_exact = v;
    rep.v_error = abs(rep.fit.v_fit - v);
    Real tol = ten_pow(-6);
    for (int k = 0; k < terms; ++k) {
        RecoveredCoefficient rc;
        rc.k = k;
        rc.cleared = rep.fit.coeffs[k].value / tau1 * Real(universal_denominator(k)) * pow(s_over_h0, k);
        rc.nearest.d = d;
        if (d == 1) {
            rc.nearest.x = nearest_integer(rc.cleared.re);
            rc.nearest.y = 0;
            rc.distance = abs(rc.cleared - Complex(Real(rc.nearest.x)));
        } else {
            Real sd = sqrt(Real(-d));
            rc.nearest.x = nearest_integer(rc.cleared.re);
            rc.nearest.y = nearest_integer(rc.cleared.im / sd);
            rc.distance = abs(rc.cleared - Complex(Real(rc.nearest.x), Real(rc.nearest.y) * sd));
        }
        rc.recovered = rc.distance < tol && rep.fit.coeffs[k].converged;
        rep.recovered.push_back(rc);
    }
    return rep;
}

}  // namespace

std::string QuadraticInteger::str() const {
    if (d == 1 || y == 0) return x.str();
    std::string s = x.str();
    s += (y < 0) ? " - " : " + ";
    BigInt ay = (y < 0) ? BigInt(-y) : y;
    if (ay != 1) s += ay.str();
    s += "sqrt(" + std::to_string(d) + ")";
    return s;
}

Real lr_bimodal_denominator(long n) {
    if (n % 2 == 0) throw DomainError("bimodal denominator requires odd n");
    Real sign = (mod((n - 1) / 2, 2) == 0) ? Real(1) : Real(-1);
    return (sqrt(Real(3)) - sign) / sqrt(Real(2));
}

Complex llr_bimodal_denominator(long n) {
    if (n % 2 == 0) throw DomainError("bimodal denominator requires odd n");
    // T_LLR(e(-1/4))^4 and T_LLR(e(-3/4))^4, with the root fixed by proximity.
    Complex s7 = sqrt_m7();
    if (mod(n, 4) == 1) {
        Complex t4 = Complex(Real(-24), Real(18)) + Complex(Real(-8), Real(-10)) * s7;
        return nearest_root(t4, 4, Complex(Real(-0.3194), Real(-1.3784)));
    }
    Complex t4 = Complex(Real(-24), Real(-18)) + Complex(Real(-8), Real(10)) * s7;
    return nearest_root(t4, 4, Complex(Real(-2.3002), Real(1.6435)));
}

Complex llr_delta(long n) {
    if (n % 2 == 0) throw DomainError("delta_n requires odd n");
    Complex c = (Complex(Real(31)) - Complex(Real(3)) * sqrt_m7()) / Real(32);
    Complex d1 = nearest_root(c, 8, Complex(Real(-0.9995), Real(0.0313)));
    return (mod(n, 4) == 1) ? d1 : d1 * e_turn(1, 8);
}

Complex lr_growth_rate(const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    ShapeSolution sol = solve_geometric(parse_word("LR"), ctx);
    return Complex(volume(sol) / (Real(2) * Real::pi()));
}

Complex llr_growth_rate(const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    ShapeSolution sol = solve_geometric(parse_word("LLR"), ctx);
    return complexified_volume_llr(sol) / Complex(Real(0), Real(2) * Real::pi());
}

Complex lr_sample(long n, long m, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    return lr_closed_form(n, 1, m, ctx) / lr_bimodal_denominator(n);
}

Complex llr_sample(long n, const PrecisionContext& ctx, const TraceOptions& opts) {
    ScopedPrecision sp(ctx);
    MonodromyWord w = parse_word("LLR");
    Complex ratio = one_loop_ratio_via_trace(w, solve_geometric(w, ctx), n, 1, 0, ctx, opts);
    return ratio / (llr_delta(n) * llr_bimodal_denominator(n));
}

AsymptoticReport recover_lr(const std::vector<Sample>& samples, int terms, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    Real tau1 = Real(1) / sqrt(Real(3));
    // (3 sqrt(-3)) / (4 pi i)
    Complex ratio = Complex(Real(3) * sqrt(Real(3)) / (Real(4) * Real::pi()));
    return recover("LR", samples, terms, lr_growth_rate(ctx), Complex(tau1), ratio, 1);
}

AsymptoticReport recover_llr(const std::vector<Sample>& samples, int terms, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    Complex tau1 = Complex(1) / sqrt(Complex(Real(7)) + sqrt_m7());
    // (56 sqrt(-7)) / (4 pi i)
    Complex ratio = Complex(Real(14) * sqrt(Real(7)) / Real::pi());
    return recover("LLR", samples, terms, llr_growth_rate(ctx), tau1, ratio, -7);
}

}  // namespace qhyp
