#include "qhyp/analysis.hpp"

namespace qhyp {

namespace {

long v2_factorial(long k) {
    long v = 0;
    for (long p = 2; p <= k; p *= 2) v += k / p;
    return v;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RationalPoly make_poly(std::initializer_list<std::pair<int, Rational>> terms) {
    RationalPoly p;
    for (const auto& [deg, c] : terms) {
        if (p.size() <= static_cast<size_t>(deg)) p.resize(deg + 1, Rational(0));
        p[deg] = c;
    }
    return p;
}

Rational R(long num, long den = 1) { return Rational(num, den); }

}  // namespace

BigInt universal_denominator(long k) {
    if (k < 0) throw DomainError("universal_denominator requires k >= 0");
    BigInt d = BigInt(1) << static_cast<unsigned>(3 * k + v2_factorial(k));
    for (long p = 3; p - 2 <= k; p += 2) {
        if (!is_prime(p)) continue;
        long e = 0;
        for (long pi = 1; k / (pi * (p - 2)) > 0; pi *= p) e += k / (pi * (p - 2));
        for (long i = 0; i < e; ++i) d *= p;
    }
    return d;
}

WkbTables wkb_tables() {
    WkbTables t;
    static const char* const a_values[] = {
        "1",
        "17",
        "2305",
        "4494181",
        "3330710213",
        "5712350244311",
        "52439486675194979",
        "19266759263233318405",
        "66121441024491501701765",
        "16057617271207914483637539331",
        "124141789617951906037615282061569",
        "990570538120722127305829578974187175",
        "40138653318545997972857202310993641324451",
        "29576935097999521111492046073898594892534975",
        "47226781739778967005629953528286582410693258585",
        "362429595685359227454501841137256200262515338447122139",
        "5342698277307014122229197133594085697739662949136507986203",
        "99765301533262256100578502016534676122077769923441605548888705",
        "103139135210996186397045798509998018431340913521815632904023932244423",
        "114042545179030657632936839533863319321123228769135395651447724677783261",
        "3726987986695921904732430600737186670799479170839193448222924045573242609263",
    };
    for (const char* s : a_values) t.a.emplace_back(s);
    static const char* const b_values[] = {"0",           "1",
                                           "65",          "17473",
                                           "49107541",    "48516825797",
                                           "104606934115751", "1158568450813142819"};
    for (const char* s : b_values) t.b.emplace_back(s);
    t.f = {
        make_poly({{0, R(1)}}),
        make_poly({{4, R(-8, 3)}}),
        make_poly({{8, R(32, 27)}, {6, R(-640, 81)}, {4, R(400, 27)}}),
        make_poly({{12, R(-256, 1215)},
                   {10, R(7168, 1215)},
                   {8, R(-180608, 3645)},
                   {6, R(1998016, 10935)},
                   {4, R(-1160836, 3645)}}),
    };
    t.g = {
        make_poly({{2, R(1)}}),
        make_poly({{6, R(-8, 9)}, {4, R(8, 3)}}),
        make_poly({{10, R(32, 135)}, {8, R(-320, 81)}, {6, R(20538, 1215)}, {4, R(-2428, 81)}}),
        make_poly({{14, R(-256, 8505)},
                   {12, R(1792, 1215)},
                   {10, R(-16256, 729)},
                   {8, R(1700576, 10935)},
                   {6, R(-3587516, 6561)},
                   {4, R(10358761, 10935)}}),
    };
    for (long k = 0; k <= 20; ++k) t.D.push_back(universal_denominator(k));
    return t;
}

Complex eval_poly(const RationalPoly& p, long m) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * m + p[i];
    return Complex(Real(acc));
}

Complex wkb_coefficient(const WkbTables& t, int l, long m) {
    if (l < 0 || l > 7) throw DomainError("wkb_coefficient: l must lie in [0, 7]");
    // u = 2 / (3 sqrt(-3)) = -2i / (3 sqrt 3)
    Complex u = Complex(Real(0), Real(-2) / (Real(3) * sqrt(Real(3))));
    auto at = [&](int k) { return pow(u, k) * Real(t.a.at(k)) / Real(t.D.at(k)); };
    auto bt = [&](int k) { return Real(-6) * pow(u, k) * Real(t.b.at(k)) / Real(t.D.at(k - 1)); };
    Complex c(0);
    for (int k = 0; 2 * k <= l; ++k) {
        if (static_cast<size_t>(k) >= t.f.size()) throw DomainError("wkb_coefficient: f table too short");
        c += at(l - 2 * k) * eval_poly(t.f[k], m);
    }
    for (int k = 0; 2 * k <= l - 1; ++k) {
        if (static_cast<size_t>(k) >= t.g.size()) throw DomainError("wkb_coefficient: g table too short");
        c += bt(l - 2 * k) * eval_poly(t.g[k], m);
    }
    return c;
}

WkbReport wkb_check(const std::vector<AsymptoticFit>& fits, const WkbTables& tables, int max_l, const Real& tol) {
    WkbReport rep;
    rep.passed = !fits.empty();
    Complex two_pi_i(Real(0), Real(2) * Real::pi());
    Real tau1 = Real(1) / sqrt(Real(3));
    for (size_t m = 0; m < fits.size(); ++m) {
        for (int l = 0; l <= max_l; ++l) {
            if (static_cast<size_t>(l) >= fits[m].coeffs.size()) throw DomainError("wkb_check: fit has too few terms");
            WkbEntry e;
            e.m = static_cast<long>(m);
            e.l = l;
            // coefficient of n^{-l} -> coefficient of (2 pi i / n)^l, normalized by tau(1)
            e.fitted = fits[m].coeffs[l].value / (pow(two_pi_i, l) * tau1);
            e.predicted = wkb_coefficient(tables, l, e.m);
            Real scale = max(abs(e.predicted), Real(1));
            e.rel_error = abs(e.fitted - e.predicted) / scale;
            e.ok = e.rel_error < tol;
            rep.passed = rep.passed && e.ok;
            rep.entries.push_back(e);
        }
    }
    return rep;
}

}  // namespace qhyp
