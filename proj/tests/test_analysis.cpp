#include <cstdio>
#include <filesystem>

#include "qhyp/analysis.hpp"
#include "test_util.hpp"

using namespace qhyp;
using qhyp::testing::close;

TEST_CASE("equal_up_to_root") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-30);
    Complex z(Real(1.25), Real(-0.5));
    RootMatch a = equal_up_to_root(z, z, 12, tol);
    CHECK(a.ok);
    CHECK(a.index == 0);
    RootMatch b = equal_up_to_root(z * e_turn(5, 12), z, 12, tol);
    CHECK(b.ok);
    CHECK(b.index == 5);
    RootMatch c = equal_up_to_root(z * e_turn(-1, 12), z, 12, tol);
    CHECK(c.ok);
    CHECK(c.index == 11);
    CHECK_FALSE(equal_up_to_root(z * e_turn(1, 24), z, 12, ten_pow(-20)).ok);
    CHECK_FALSE(equal_up_to_root(z * Real(1.0001), z, 12, ten_pow(-20)).ok);
    CHECK_THROWS_AS(equal_up_to_root(z, Complex(0), 12, tol), DomainError);
}

TEST_CASE("universal denominators match the tabulated factorizations") {
    // {k, {(p, e)}}
    struct Row {
        long k;
        std::vector<std::pair<long, long>> f;
    };
    const std::vector<Row> table = {
        {0, {}},
        {1, {{2, 3}, {3, 1}}},
        {2, {{2, 7}, {3, 2}}},
        {3, {{2, 10}, {3, 4}, {5, 1}}},
        {4, {{2, 15}, {3, 5}, {5, 1}}},
        {5, {{2, 18}, {3, 6}, {5, 1}, {7, 1}}},
        {6, {{2, 22}, {3, 8}, {5, 2}, {7, 1}}},
        {7, {{2, 25}, {3, 9}, {5, 2}, {7, 1}}},
        {8, {{2, 31}, {3, 10}, {5, 2}, {7, 1}}},
        {9, {{2, 34}, {3, 13}, {5, 3}, {7, 1}, {11, 1}}},
        {10, {{2, 38}, {3, 14}, {5, 3}, {7, 2}, {11, 1}}},
        {11, {{2, 41}, {3, 15}, {5, 3}, {7, 2}, {11, 1}, {13, 1}}},
        {12, {{2, 46}, {3, 17}, {5, 4}, {7, 2}, {11, 1}, {13, 1}}},
        {13, {{2, 49}, {3, 18}, {5, 4}, {7, 2}, {11, 1}, {13, 1}}},
        {14, {{2, 53}, {3, 19}, {5, 4}, {7, 2}, {11, 1}, {13, 1}}},
        {15, {{2, 56}, {3, 21}, {5, 6}, {7, 3}, {11, 1}, {13, 1}, {17, 1}}},
        {16, {{2, 63}, {3, 22}, {5, 6}, {7, 3}, {11, 1}, {13, 1}, {17, 1}}},
        {17, {{2, 66}, {3, 23}, {5, 6}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {19, 1}}},
        {18, {{2, 70}, {3, 26}, {5, 7}, {7, 3}, {11, 2}, {13, 1}, {17, 1}, {19, 1}}},
        {19, {{2, 73}, {3, 27}, {5, 7}, {7, 3}, {11, 2}, {13, 1}, {17, 1}, {19, 1}}},
        {20, {{2, 78}, {3, 28}, {5, 7}, {7, 4}, {11, 2}, {13, 1}, {17, 1}, {19, 1}}},
    };
    for (const Row& r : table) {
        BigInt expect = 1;
        for (auto [p, e] : r.f)
            for (long i = 0; i < e; ++i) expect *= p;
        CHECK(universal_denominator(r.k) == expect);
    }
    CHECK(universal_denominator(1) == 24);
    CHECK_THROWS_AS(universal_denominator(-1), DomainError);
    WkbTables t = wkb_tables();
    CHECK(t.D.size() == 21u);
    CHECK(t.a.size() == 21u);
    CHECK(t.a[4] == BigInt(3330710213LL));
}

TEST_CASE("extrapolation: constant and synthetic series") {
    PrecisionContext ctx(60);
    ScopedPrecision sp(ctx);
    Complex c(Real(2), Real(-1));
    std::vector<Sample> konst;
    for (long n = 101; n <= 161; n += 2) konst.push_back({n, c});
    AsymptoticFit f = extrapolate(konst, {});
    CHECK(close(f.v_fit, Complex(0), ten_pow(-50)));
    CHECK(close(f.coeffs[0].value, c, ten_pow(-50)));
    for (size_t k = 1; k < f.coeffs.size(); ++k) CHECK(abs(f.coeffs[k].value) < ten_pow(-40));

    // G(n) = exp(v/2 (n - 1/n)) (1 + 2/n - 3i/n^2 + 5/n^3)
    Complex v(Real("0.3"), Real("-0.1"));
    std::vector<Sample> syn;
    for (long n = 201; n <= 299; n += 2) {
        Real x = Real(1) / Real(n);
        Complex phi = Complex(1) + Complex(Real(2) * x) + Complex(Real(0), Real(-3) * x * x) +
                      Complex(Real(5) * x * x * x);
        syn.push_back({n, exp(v * Complex((Real(n) - x) / Real(2))) * phi});
    }
    ExtrapolationOptions o;
    o.terms = 4;
    AsymptoticFit g = extrapolate(syn, o);
    CHECK(close(g.v_fit, v, ten_pow(-30)));
    o.v_reference = v;
    AsymptoticFit h = extrapolate(syn, o);
    CHECK(close(h.coeffs[0].value, Complex(1), ten_pow(-40)));
    CHECK(close(h.coeffs[1].value, Complex(2), ten_pow(-35)));
    CHECK(close(h.coeffs[2].value, Complex(Real(0), Real(-3)), ten_pow(-30)));
    CHECK(close(h.coeffs[3].value, Complex(5), ten_pow(-25)));
    for (const auto& co : h.coeffs) CHECK(co.converged);

    std::vector<Sample> few(konst.begin(), konst.begin() + 10);
    CHECK_THROWS_AS(extrapolate(few, {}), DomainError);
    std::vector<Sample> even = konst;
    even[3].n = 200;
    CHECK_THROWS_AS(extrapolate(even, {}), DomainError);
}

TEST_CASE("LR asymptotics at moderate n: v, c_0 and the first integers") {
    PrecisionContext ctx(80);
    ScopedPrecision sp(ctx);
    std::vector<Sample> s;
    for (long n = 301; n <= 399; n += 2) s.push_back({n, lr_sample(n, 0, ctx)});
    AsymptoticReport r = recover_lr(s, 3, ctx);
    CHECK(r.v_error < ten_pow(-10));
    CHECK(close(r.fit.coeffs[0].value, Complex(Real(1) / sqrt(Real(3))), ten_pow(-12)));
    CHECK(r.recovered[0].nearest.x == 1);
    CHECK(r.recovered[1].nearest.x == 17);
    CHECK(r.recovered[2].nearest.x == 2305);
    CHECK(r.recovered[0].recovered);
}

TEST_CASE("bimodal denominators") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-30);
    Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
    CHECK(abs(lr_bimodal_denominator(5) - (s3 - Real(1)) / s2) < tol);
    CHECK(abs(lr_bimodal_denominator(7) - (s3 + Real(1)) / s2) < tol);
    // the LLR values are fourth roots of even-order invariants at e(-1/4), e(-3/4)
    MonodromyWord w = parse_word("LLR");
    Complex e1 = bwy_even(w, 4, 3, 3, 0, ctx), e3 = bwy_even(w, 4, 1, 1, 0, ctx);
    CHECK(close(pow(e1, 4), pow(llr_bimodal_denominator(5), 4), tol));
    CHECK(close(pow(e3, 4), pow(llr_bimodal_denominator(7), 4), tol));
    Complex d = llr_delta(5);
    Complex s7(Real(0), sqrt(Real(7)));
    CHECK(close(pow(d, 8), (Complex(31) - Complex(3) * s7) / Real(32), tol));
    CHECK(abs(d - Complex(Real(-0.9995), Real(0.0313))) < Real(1e-3));
    CHECK(close(llr_delta(7), d * e_turn(1, 8), tol));
    CHECK(abs(lr_growth_rate(ctx).re - Real("0.3230659472194505")) < Real(1e-15));
}

TEST_CASE("Fourier check for 4_1") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    for (long n : {1L, 3L, 5L, 7L}) {
        FourierCheckResult r = fourier_check_41(n, 1, ctx);
        CHECK(r.passed);
        CHECK(r.rows.size() == static_cast<size_t>(n));
        CHECK(r.max_residual < ten_pow(-25));
        CHECK(r.unitarity_residual < ten_pow(-30));
    }
    CHECK(fourier_check_41(5, 2, ctx).passed);
    CHECK_THROWS_AS(fourier_check_41(4, 1, ctx), DomainError);
}

TEST_CASE("q-difference recurrences") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    for (long n : {7L, 9L}) {
        for (long a = 1; a < n; ++a) {
            if (gcd_ll(a, n) != 1) continue;
            CHECK(verify_sigma_recurrence(n, a, ctx).max_residual < ten_pow(-30));
            CHECK(verify_T_recurrence(n, a, ctx).max_residual < ten_pow(-25));
        }
    }
    CHECK(verify_sigma_recurrence(1, 0, ctx).max_residual.is_zero());
    CHECK(verify_T_recurrence(1, 0, ctx).max_residual.is_zero());
    // at n = 7 the leading coefficient has the factor q^{2m+3} - 1, zero at m = 2
    RecurrenceResult r7 = verify_T_recurrence(7, 1, ctx);
    CHECK(r7.skipped == std::vector<long>{2});
    // residuals are roundoff: more digits give a lower floor
    PrecisionContext hi(80);
    CHECK(verify_sigma_recurrence(9, 1, hi).max_residual < ten_pow(-70));
    CHECK(verify_T_recurrence(9, 1, hi).max_residual < ten_pow(-65));
}

TEST_CASE("WKB tables") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    WkbTables t = wkb_tables();
    for (long m = 0; m <= 4; ++m) CHECK(close(wkb_coefficient(t, 0, m), Complex(1), ten_pow(-35)));
    // c_1(m) = at_1 + bt_1 m^2
    Complex u(Real(0), Real(-2) / (Real(3) * sqrt(Real(3))));
    for (long m = 0; m <= 4; ++m) {
        Complex expect = u * Real(17) / Real(24) + Real(-6) * u * Real(m * m);
        CHECK(close(wkb_coefficient(t, 1, m), expect, ten_pow(-35)));
    }
    for (int l = 0; l <= 3; ++l) {
        Complex at = pow(u, l) * Real(t.a[l]) / Real(t.D[l]);
        CHECK(close(wkb_coefficient(t, l, 0), at, ten_pow(-35)));
    }
    CHECK(eval_poly(t.f[1], 3).re == Real(-216));
}

TEST_CASE("sample cache round trip") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    std::vector<CachedSample> rows;
    for (long n = 3; n <= 9; n += 2) rows.push_back({n, 1, 0, lr_closed_form(n, 1, 0, ctx)});
    rows.push_back({11, 2, 3, Complex(Real(0), Real(-1))});
    auto path = std::filesystem::temp_directory_path() / "qhyp_samples_test.txt";
    save_samples(path.string(), rows, 50);
    std::vector<CachedSample> back = load_samples(path.string());
    std::remove(path.string().c_str());
    REQUIRE(back.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].n == rows[i].n);
        CHECK(back[i].a == rows[i].a);
        CHECK(back[i].m == rows[i].m);
        CHECK(close(back[i].value, rows[i].value, ten_pow(-48) * max(abs(rows[i].value), Real(1))));
    }
    CHECK_THROWS_AS(load_samples("/nonexistent/qhyp.txt"), DomainError);
}
