#include "qhyp/oneloop.hpp"
#include "test_util.hpp"

using namespace qhyp;
using qhyp::testing::close;

namespace {

bool is_root_of_unity(const Complex& r, long order, const Real& tol) {
    return abs(abs(r) - Real(1)) < tol && close(pow(r, order), Complex(1), tol * Real(order));
}

}  // namespace

TEST_CASE("4_1 gluing data reduces to meridian and longitude NZ data") {
    NZDatum mu = reduce_gluing(raw_41(), ShapeKind::zp, 2, Curve::meridian, false);
    CHECK(mu.A == IntMat{{1, 1}, {1, 0}});
    CHECK(mu.B == IntMat{{-1, -1}, {0, -1}});
    CHECK(mu.nu == IntVec{0, 0});
    CHECK(mu.d == 1);
    CHECK(mu.fp == IntVec{0, 0});
    CHECK(mu.f == IntVec{0, 0});

    NZDatum la = reduce_gluing(raw_41(), ShapeKind::zpp, 2, Curve::longitude, true);
    CHECK(la.A == IntMat{{1, 1}, {0, 1}});
    CHECK(la.B == IntMat{{2, 2}, {0, 2}});
    CHECK(la.nu == IntVec{2, 1});
    CHECK(la.d == 2);
    CHECK(la.fp == IntVec{1, 1});
    CHECK(la.f == IntVec{0, 0});
    // the longitude datum of the layered triangulation of LR is the same
    NZDatum lr = nz_longitude(parse_word("LR"));
    CHECK(lr.A == la.A);
    CHECK(lr.B == la.B);
    CHECK(lr.nu == la.nu);
}

TEST_CASE("raw data validation and flattenings") {
    RawGluingData bad = raw_41();
    bad.G[0][0] += 1;
    CHECK_THROWS_AS(validate_raw(bad), DomainError);
    RawGluingData noeta = raw_41();
    noeta.eta.clear();
    validate_raw(noeta);
    CHECK(noeta.eta == IntVec{2, 2, 0, 0});
    CHECK(parse_shape_kind("zpp") == ShapeKind::zpp);
    CHECK_THROWS_AS(parse_shape_kind("w"), DomainError);

    IntMat A{{1, 1}, {0, 1}}, B{{2, 2}, {0, 2}};
    IntVec nu{2, 1};
    auto fl = find_flattening(A, B, nu);
    REQUIRE(fl.has_value());
    IntVec lhs = matvec(A, fl->first), rhs = matvec(B, fl->second);
    for (size_t i = 0; i < nu.size(); ++i) CHECK(lhs[i] + rhs[i] == nu[i]);
    // 2 f'_1 = 1 has no integral solution
    CHECK_FALSE(find_flattening(IntMat{{2}}, IntMat{{2}}, IntVec{1}).has_value());
}

TEST_CASE("state sum equals the scaled BWY trace") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-45);
    for (const char* s : {"LR", "LLR", "LRR"}) {
        MonodromyWord w = parse_word(s);
        ShapeSolution sol = solve_geometric(w, ctx);
        NZDatum nz = nz_longitude(w);
        for (long n : {3L, 5L}) {
            RootOfUnity q(1, n), zeta(2, n);
            CVec th = thetas(sol, n);
            for (long m : {0L, 1L, 2L}) {
                Complex tr = trace_H(w, sol, th, q, m).value * pow(sqrt(Real(n)), static_cast<long>(w.size()));
                StateSumResult ss = state_sum(nz, sol.zp, sol.z, zeta, m, ctx);
                CHECK(abs(tr - ss.sum) / abs(tr) < tol);
                Complex via = one_loop_ratio_via_trace(w, sol, n, 1, m, ctx);
                CHECK(abs(via - ss.ratio) / abs(ss.ratio) < tol);
                CHECK(ss.ambiguity == 12 * n);
            }
        }
    }
}

TEST_CASE("state sum size guard") {
    PrecisionContext ctx(20);
    ScopedPrecision sp(ctx);
    MonodromyWord w = parse_word("LLLRR");
    ShapeSolution sol = solve_geometric(w, ctx);
    CHECK_THROWS_AS(state_sum(nz_longitude(w), sol.zp, sol.z, RootOfUnity(1, 17), 0, ctx), DomainError);
    CHECK_THROWS_AS(state_sum(nz_longitude(w), sol.zp, sol.z, RootOfUnity(1, 4), 0, ctx), DomainError);
}

TEST_CASE("4_1 closed forms agree with the state sums") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-40);
    NZDatum mu = reduce_gluing(raw_41(), ShapeKind::zp, 2, Curve::meridian, false);
    NZDatum la = reduce_gluing(raw_41(), ShapeKind::zpp, 2, Curve::longitude, true);
    CVec z6(2, e_turn(1, 6));
    for (long n : {3L, 5L, 7L}) {
        RootOfUnity zeta(1, n);
        for (long m : {0L, 1L, 2L}) {
            Complex sm = state_sum(mu, z6, z6, zeta, m, ctx).tau;
            Complex cm = tau_41_meridian(n, 1, m, ctx);
            // the square root in tau_mu(1) of the datum carries a fixed e(1/8)
            CHECK(close(sm / cm, e_turn(1, 8), tol));
            Complex sl = state_sum(la, z6, z6, zeta, m, ctx).tau;
            Complex cl = tau_41_longitude(n, 1, m, ctx);
            if (abs(cl) < ten_pow(-40)) {
                CHECK(abs(sl) < ten_pow(-40));
            } else {
                CHECK(is_root_of_unity(sl / cl, 12 * n, tol));
            }
        }
    }
}

TEST_CASE("4_1 longitude against LR: tau(zeta^2) = tau(1) T(zeta)") {
    PrecisionContext ctx(50);
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-40);
    for (long n : {3L, 5L, 7L, 9L}) {
        for (long m = 0; m < n; ++m) {
            Complex lhs = tau_41_longitude(n, 2, m, ctx);
            Complex rhs = lr_closed_form(n, 1, m, ctx) / sqrt(Real(3));
            if (abs(rhs) < ten_pow(-40)) {
                CHECK(abs(lhs) < ten_pow(-40));
                continue;
            }
            CHECK(is_root_of_unity(lhs / rhs, 12 * n, tol));
        }
    }
}

TEST_CASE("datum shapes follow the eliminated shape") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    Complex z(Real(0.3), Real(0.8));
    Complex zp = Complex(1) / (Complex(1) - z), zpp = Complex(1) - Complex(1) / z;
    auto [a1, b1] = datum_shapes(CVec{z}, ShapeKind::zpp);
    CHECK(close(a1[0], zp, ten_pow(-25)));
    CHECK(close(b1[0], z, ten_pow(-25)));
    auto [a2, b2] = datum_shapes(CVec{z}, ShapeKind::zp);
    CHECK(close(a2[0], z, ten_pow(-25)));
    CHECK(close(b2[0], zpp, ten_pow(-25)));
}
