#include "qhyp/shapes.hpp"

#include <random>

namespace qhyp {

namespace {

struct System {
    IntMat P, R;  // P Log z' + R Log z = c
    CVec c;
};

Real max_abs(const CVec& v) {
    Real m(0);
    for (const auto& x : v) m = max(m, abs(x));
    return m;
}

CVec residual(const System& s, const CVec& zp) {
    size_t N = zp.size();
    CVec lzp(N), lz(N);
    for (size_t j = 0; j < N; ++j) {
        lzp[j] = log(zp[j]);
        lz[j] = log(Complex(1) - Complex(1) / zp[j]);
    }
    CVec F(N);
    for (size_t i = 0; i < N; ++i) {
        Complex acc = -s.c[i];
        for (size_t j = 0; j < N; ++j) {
            if (s.P[i][j]) acc += lzp[j] * Real(s.P[i][j]);
            if (s.R[i][j]) acc += lz[j] * Real(s.R[i][j]);
        }
        F[i] = acc;
    }
    return F;
}

CMat jacobian(const System& s, const CVec& zp) {
    size_t N = zp.size();
    CVec dlzp(N), dlz(N);
    for (size_t j = 0; j < N; ++j) {
        dlzp[j] = Complex(1) / zp[j];
        dlz[j] = Complex(1) / (zp[j] * (zp[j] - Complex(1)));
    }
    CMat J(N, CVec(N, Complex(0)));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) J[i][j] = dlzp[j] * Real(s.P[i][j]) + dlz[j] * Real(s.R[i][j]);
    return J;
}

bool admissible(const CVec& zp, const Real& eps) {
    for (const auto& x : zp)
        if (abs(x) < eps || abs(x - Complex(1)) < eps) return false;
    return true;
}

// Damped Newton from `start`; returns true on convergence below `tol`.
bool newton(const System& s, CVec& zp, const Real& tol) {
    Real eps = ten_pow(-20);
    CVec F = residual(s, zp);
    Real r = max_abs(F);
    for (int it = 0; it < 200; ++it) {
        if (r < tol) return true;
        CVec dx;
        try {
            dx = solve(jacobian(s, zp), F);
        } catch (const ComputationError&) {
            return false;
        }
        Real step(1);
        bool moved = false;
        for (int k = 0; k < 30; ++k) {
            CVec trial(zp.size());
            for (size_t j = 0; j < zp.size(); ++j) trial[j] = zp[j] - dx[j] * step;
            if (admissible(trial, eps)) {
                CVec Ft = residual(s, trial);
                Real rt = max_abs(Ft);
                if (rt < r || k == 29) {
                    zp = std::move(trial);
                    F = std::move(Ft);
                    r = rt;
                    moved = true;
                    break;
                }
            }
            step = step / Real(2);
        }
        if (!moved) return false;
    }
    return r < tol;
}

ShapeSolution finish(const System& s, CVec zp, int attempts) {
    ShapeSolution sol;
    size_t N = zp.size();
    sol.zp = zp;
    sol.z.resize(N);
    sol.zpp.resize(N);
    for (size_t i = 0; i < N; ++i) {
        sol.z[i] = Complex(1) - Complex(1) / zp[i];
        sol.zpp[i] = Complex(1) - Complex(1) / sol.z[i];
    }
    sol.residual = max_abs(residual(s, zp));
    sol.attempts = attempts;
    return sol;
}

ShapeSolution run_solver(const System& s, size_t N, const PrecisionContext& ctx, std::uint64_t seed) {
    ScopedPrecision sp(ctx);
    Real tol = ten_pow(-(ctx.digits - 5));
    // Tighter internal target so that the reported residual clears the bound.
    Real inner = ten_pow(-(ctx.digits + ctx.guard / 2));
    std::vector<CVec> starts;
    starts.emplace_back(N, e_turn(1, 6));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-1.5, 2.5), im(0.1, 2.5);
    for (int k = 0; k < 10; ++k) {
        CVec g(N);
        for (auto& x : g) x = Complex(Real(re(rng)), Real(im(rng)));
        starts.push_back(std::move(g));
    }
    bool saw_nongeometric = false;
    int attempt = 0;
    for (auto& zp : starts) {
        ++attempt;
        if (!newton(s, zp, inner) && !newton(s, zp, tol)) continue;
        ShapeSolution sol = finish(s, zp, attempt);
        bool geometric = true;
        for (size_t i = 0; i < N; ++i)
            if (sol.z[i].im.sign() <= 0 || sol.zp[i].im.sign() <= 0) geometric = false;
        if (!geometric) {
            saw_nongeometric = true;
            continue;
        }
        if (sol.residual < tol) return sol;
    }
    if (saw_nongeometric) throw NonGeometricSolution("Newton converged only to non-geometric solutions");
    throw ComputationError("shape solver did not converge");
}

}  // namespace

ShapeSolution solve_geometric(const MonodromyWord& w, const PrecisionContext& ctx, std::uint64_t seed) {
    ScopedPrecision sp(ctx);
    LayeredData ld = layered_data(w);
    size_t N = w.size();
    System s;
    s.P = ld.Q;
    s.R = int_zeros(N, N);
    s.c.resize(N);
    for (size_t i = 0; i < N; ++i) {
        s.R[i][i] = 2;
        s.c[i] = Complex(Real(0), Real::pi() * Real(ld.eta[i]));
    }
    ShapeSolution sol = run_solver(s, N, ctx, seed);
    sol.word = w.letters;
    return sol;
}

ShapeSolution solve_nz(const NZDatum& nz, const PrecisionContext& ctx, std::uint64_t seed) {
    ScopedPrecision sp(ctx);
    validate_nz(nz, false);
    size_t N = static_cast<size_t>(nz.N);
    System s;
    s.P = nz.A;
    s.R = nz.B;
    s.c.resize(N);
    for (size_t i = 0; i < N; ++i) s.c[i] = Complex(Real(0), Real::pi() * Real(nz.nu[i]));
    return run_solver(s, N, ctx, seed);
}

CVec thetas(const ShapeSolution& sol, long n) {
    if (n <= 0) throw DomainError("thetas: n must be positive");
    CVec t(sol.zp.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = root(sol.zp[i], n);
    return t;
}

Real volume(const ShapeSolution& sol) {
    Real v(0);
    for (const auto& z : sol.z) v += bloch_wigner(z);
    return v;
}

Complex complexified_volume_llr(const ShapeSolution& sol) {
    if (sol.word != "LLR") throw DomainError("complexified_volume_llr requires the LLR solution");
    const Complex& z1 = sol.z[0];
    const Complex& z2 = sol.z[1];
    Complex ipi(Real(0), Real::pi());
    Real pi = Real::pi();
    return rogers(z1) + rogers(z2) * Real(2) - ipi * log(z1) / Real(2) - ipi * log(z2) - Complex(pi * pi * Real(3) / Real(4));
}

Complex tau_one(const NZDatum& nz, const CVec& zp, const CVec& z) {
    size_t N = static_cast<size_t>(nz.N);
    if (zp.size() != N || z.size() != N) throw DomainError("tau_one: shape vector length mismatch");
    CMat M(N, CVec(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) M[i][j] = z[j] * Real(nz.A[i][j]) + Real(nz.B[i][j]) / zp[j];
    Complex det = determinant(M);
    if (abs(det) < singular_threshold()) throw ComputationError("tau_one: singular determinant (datum is degenerate)");
    Complex mono(1);
    for (size_t i = 0; i < N; ++i) mono = mono * pow(zp[i], nz.f[i]) * pow(z[i], -nz.fp[i]);
    return Complex(1) / sqrt(det * mono);
}

Complex tau_one(const NZDatum& nz, const ShapeSolution& sol) { return tau_one(nz, sol.zp, sol.z); }

Real shape_relation_defect(const ShapeSolution& sol) {
    Real m(0);
    for (size_t i = 0; i < sol.z.size(); ++i) {
        m = max(m, abs(sol.z[i] * sol.zp[i] * sol.zpp[i] + Complex(1)));
        m = max(m, abs(Complex(1) / sol.z[i] + sol.zpp[i] - Complex(1)));
    }
    return m;
}

}  // namespace qhyp
