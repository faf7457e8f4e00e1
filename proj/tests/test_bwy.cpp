#include "qhyp/bwy.hpp"
#include "test_util.hpp"

using namespace qhyp;
using qhyp::testing::close;
using qhyp::testing::close_rel;

namespace {

bool is_root_of_unity(const Complex& r, long order, const Real& tol) {
    return abs(abs(r) - Real(1)) < tol && close(pow(r, order), Complex(1), tol * Real(order));
}

}  // namespace

TEST_CASE("Fourier matrices: closed-form determinants and fast application") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-45);
    for (long n : {3L, 5L, 7L, 9L}) {
        for (long a = 1; a < n; ++a) {
            if (gcd_ll(a, n) != 1) continue;
            RootOfUnity q(a, n);
            for (char kind : {'L', 'R'}) {
                CMat F = fourier_matrix(kind, q);
                CHECK(close(determinant(F), fourier_det_closed(kind, q), tol));
                CVec v(n);
                for (long i = 0; i < n; ++i) v[i] = Complex(Real(i + 1), Real(2 * i - 3));
                CVec fast = fourier_apply(kind, q, v);
                for (long r = 0; r < n; ++r) {
                    Complex acc(0);
                    for (long c = 0; c < n; ++c) acc += F[r][c] * v[c];
                    CHECK(close(fast[r], acc, tol));
                }
            }
        }
    }
}

TEST_CASE("D matrices are periodic and reject wrong thetas") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    MonodromyWord w = parse_word("LLR");
    ShapeSolution sol = solve_geometric(w, ctx);
    RootOfUnity q(1, 7);
    CVec th = thetas(sol, 7);
    for (size_t i = 0; i < w.size(); ++i) CHECK(build_D(i, w, sol, th, q, 1).size() == 7u);
    CVec bad = th;
    bad[0] = bad[0] * Complex(Real(1.001));
    CHECK_THROWS_AS(build_D(0, w, sol, bad, q, 0), ComputationError);
}

TEST_CASE("dense, streaming and FFT traces agree; threads are deterministic") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-35);
    for (const char* s : {"LR", "LLR", "LRR", "LLRLR"}) {
        MonodromyWord w = parse_word(s);
        ShapeSolution sol = solve_geometric(w, ctx);
        for (long n : {5L, 7L, 9L}) {
            RootOfUnity q(2, n);
            CVec th = thetas(sol, n);
            for (long m : {0L, 1L, 3L}) {
                TraceOptions o;
                o.mode = TraceMode::dense;
                Complex dense = trace_H(w, sol, th, q, m, o).value;
                o.mode = TraceMode::streaming;
                Complex stream = trace_H(w, sol, th, q, m, o).value;
                o.mode = TraceMode::fft;
                Complex fft = trace_H(w, sol, th, q, m, o).value;
                Real scale = max(abs(dense), Real(1));
                CHECK(abs(dense - stream) / scale < tol);
                CHECK(abs(dense - fft) / scale < tol);
                o.mode = TraceMode::streaming;
                o.threads = 3;
                Complex threaded = trace_H(w, sol, th, q, m, o).value;
                CHECK(threaded.re == stream.re);
                CHECK(threaded.im == stream.im);
            }
        }
    }
}

TEST_CASE("precision monitor stays quiet on well-conditioned input") {
    PrecisionContext ctx(60);
    ScopedPrecision sp(ctx);
    MonodromyWord w = parse_word("LLR");
    ShapeSolution sol = solve_geometric(w, ctx);
    TraceOptions o;
    o.monitor = true;
    TraceResult r = trace_H(w, sol, thetas(sol, 11), RootOfUnity(1, 11), 0, o);
    CHECK_FALSE(r.precision_warning);
    CHECK(r.monitor_deviation < ten_pow(-15));
}

TEST_CASE("closed-form determinant matches the dense product") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-45);
    for (const char* s : {"LR", "LLR", "LRR"}) {
        MonodromyWord w = parse_word(s);
        ShapeSolution sol = solve_geometric(w, ctx);
        for (long n : {3L, 5L, 7L}) {
            RootOfUnity q(1, n);
            CVec th = thetas(sol, n);
            Complex closed = det_H_closed(w, sol, th, q);
            for (long m : {0L, 1L, 2L}) CHECK(close_rel(det_H_direct(w, sol, th, q, m), closed, tol));
        }
    }
}

TEST_CASE("omega turn lies in (-1/2, 1/2]") {
    for (const char* s : {"LR", "LLR", "LRR", "LLLR"})
        for (long n = 3; n <= 31; n += 2) {
            Rational t = omega_turn(parse_word(s), RootOfUnity(1, n));
            CHECK(t > Rational(-1, 2));
            CHECK(t <= Rational(1, 2));
        }
}

TEST_CASE("LR: trace path agrees with the decoupled closed form up to a 12n-th root") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-40);
    MonodromyWord w = parse_word("LR");
    ShapeSolution sol = solve_geometric(w, ctx);
    for (long n : {3L, 5L, 7L, 9L}) {
        for (long a : {1L, 2L}) {
            for (long m = 0; m < n; ++m) {
                Complex t = bwy_invariant(w, sol, n, a, m, ctx).value;
                Complex c = lr_closed_form(n, a, m, ctx);
                if (abs(c) < ten_pow(-40)) {
                    CHECK(abs(t) < ten_pow(-35));
                    continue;
                }
                CHECK(is_root_of_unity(t / c, 12 * n, tol));
            }
        }
    }
    // sigma sums are the building blocks of the closed form
    CVec sig = lr_sigma_all(7, 1, ctx);
    CHECK(sig.size() == 7u);
}

TEST_CASE("LR headline value at n = 20001") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Complex t = lr_closed_form(20001, 1, 0, ctx);
    DecimalString d = to_decimal(abs(t), 11);
    CHECK(d.exponent == 1402);
    CHECK(d.mantissa.substr(0, 12) == "4.0108263579");
}

TEST_CASE("invariant errors") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    MonodromyWord w = parse_word("LR");
    CHECK_THROWS_AS(bwy_invariant(w, 4, 1, 0, ctx), DomainError);
    CHECK_THROWS_AS(lr_closed_form(6, 1, 0, ctx), DomainError);
    CHECK_THROWS_AS(bwy_even(w, 6, 1, 1, 0, ctx), DomainError);
    CHECK_THROWS_AS(bwy_even(w, 4, 1, 2, 0, ctx), DomainError);
    CHECK_THROWS_AS(parse_trace_mode("bogus"), DomainError);
    CHECK(parse_trace_mode("fft") == TraceMode::fft);
    CHECK(trace_mode_name(TraceMode::streaming) == "streaming");
}

TEST_CASE("even order: LR at n = 4") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-45);
    MonodromyWord w = parse_word("LR");
    Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
    Complex plus = Complex((s3 + Real(1)) / s2), minus = Complex((s3 - Real(1)) / s2);
    Complex t1 = bwy_even(w, 4, 1, 1, 0, ctx);
    Complex t3 = bwy_even(w, 4, 3, 3, 0, ctx);
    CHECK(is_root_of_unity(t1 / plus, 48, tol));
    CHECK(is_root_of_unity(t3 / minus, 48, tol));
    // the other square root of q
    CHECK(close(bwy_even(w, 4, 1, 5, 0, ctx), t1, tol));
    CHECK(close(bwy_even(w, 4, 3, 7, 0, ctx), t3, tol));
}

TEST_CASE("descendant tables") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    MonodromyWord w = parse_word("LR");
    DescendantTable odd = descendant_table(w, RootOfUnity(1, 5), ctx);
    CHECK(odd.values.size() == 5u);
    CHECK(odd.ambiguity == 60);
    CHECK(odd.root_convention == std::string(kRootConvention));
    DescendantTable even = descendant_table(w, RootOfUnity(1, 8, 1), ctx);
    CHECK(even.values.size() == 4u);
    CHECK(even.root_convention == std::string(kEvenRootConvention));
}
