#include "qhyp/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace qhyp {

namespace {

struct NevilleEstimate {
    Complex value;
    Real correction;  // |P_d - P_{d-1}| at the selected degree
    int degree = 0;
};

// Extrapolates to x = 0 through (x_i, y_i) ordered most accurate first; the
// degree with the smallest last correction is selected.
NevilleEstimate neville_at_zero(const std::vector<Real>& x, std::vector<Complex> y) {
    size_t M = y.size();
    NevilleEstimate best;
    best.value = y[0];
    Complex prev = y[0];
    bool have = false;
    for (size_t d = 1; d < M; ++d) {
        for (size_t i = 0; i + d < M; ++i) {
            // P_{i..i+d}(0) from P_{i..i+d-1} and P_{i+1..i+d}
            y[i] = (y[i] * x[i + d] - y[i + 1] * x[i]) / (x[i + d] - x[i]);
        }
        Real corr = abs(y[0] - prev);
        if (!have || corr < best.correction) {
            best.value = y[0];
            best.correction = corr;
            best.degree = static_cast<int>(d);
            have = true;
        }
        prev = y[0];
    }
    return best;
}

struct Window {
    std::vector<long> n;
    std::vector<Complex> g;
};

// v from u(n) = 2 Log(G(n')/G(n)) / ((n' - 1/n') - (n - 1/n)) -> v as n -> oo.
NevilleEstimate fit_v(const Window& w) {
    std::vector<Real> x;
    std::vector<Complex> u;
    for (size_t i = w.n.size() - 1; i > 0; --i) {
        long n0 = w.n[i - 1], n1 = w.n[i];
        Real dn = (Real(n1) - Real(1) / Real(n1)) - (Real(n0) - Real(1) / Real(n0));
        u.push_back(Complex(Real(2)) * log(w.g[i] / w.g[i - 1]) / dn);
        x.push_back(Real(1) / Real(n0));
    }
    return neville_at_zero(x, u);
}

}  // namespace

AsymptoticFit extrapolate(const std::vector<Sample>& samples_in, const ExtrapolationOptions& opts) {
    int K = opts.terms;
    if (K < 1) throw DomainError("extrapolate: terms must be positive");
    if (samples_in.size() < static_cast<size_t>(2 * K + 8))
        throw DomainError("extrapolate: insufficient samples (need at least 2K+8)");
    if (opts.window_modulus < 2) throw DomainError("extrapolate: window modulus must be at least 2");
    std::vector<Sample> samples = samples_in;
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.n < b.n; });
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].n % 2 == 0 || samples[i].n <= 0) throw DomainError("extrapolate: samples must be at odd n > 0");
        if (i && samples[i].n == samples[i - 1].n) throw DomainError("extrapolate: duplicate n");
    }
    Window win[2];
    for (const Sample& s : samples) {
        long r = static_cast<long>(mod(s.n, opts.window_modulus));
        int idx = (r == 1) ? 0 : (r == opts.window_modulus - 1 ? 1 : -1);
        if (idx < 0) continue;
        win[idx].n.push_back(s.n);
        win[idx].g.push_back(s.value);
    }
    for (const Window& w : win)
        if (w.n.size() < static_cast<size_t>(K + 3))
            throw DomainError("extrapolate: insufficient samples in a window");

    AsymptoticFit fit;
    std::ostringstream range;
    range << "odd n in [" << samples.front().n << ", " << samples.back().n << "], " << samples.size()
          << " samples, windows n = 1 and n = " << opts.window_modulus - 1 << " mod " << opts.window_modulus;
    fit.n_range = range.str();

    NevilleEstimate v0 = fit_v(win[0]), v1 = fit_v(win[1]);
    fit.v_fit = (v0.correction <= v1.correction) ? v0.value : v1.value;
    fit.v_spread = abs(v0.value - v1.value);
    fit.v = opts.v_reference ? *opts.v_reference : fit.v_fit;

    // F(n) = G(n) / exp(v/2 (n - 1/n)), ordered by decreasing n.
    std::vector<Real> x[2];
    std::vector<Complex> F[2];
    for (int wi = 0; wi < 2; ++wi) {
        for (size_t i = win[wi].n.size(); i-- > 0;) {
            long n = win[wi].n[i];
            Real nn(n);
            x[wi].push_back(Real(1) / nn);
            F[wi].push_back(win[wi].g[i] / exp(fit.v * Complex(Real(nn - Real(1) / nn) / Real(2))));
        }
    }
    for (int k = 0; k < K; ++k) {
        NevilleEstimate e[2] = {neville_at_zero(x[0], F[0]), neville_at_zero(x[1], F[1])};
        int better = (e[0].correction <= e[1].correction) ? 0 : 1;
        FitCoefficient c;
        c.value = e[better].value;
        c.degree = e[better].degree;
        c.spread = abs(e[0].value - e[1].value);
        c.converged = c.spread < ten_pow(-12) * abs(c.value) || (c.spread.is_zero());
        fit.coeffs.push_back(c);
        // peel: F <- (F - c_k) n, each window with its own estimate
        for (int wi = 0; wi < 2; ++wi)
            for (size_t i = 0; i < F[wi].size(); ++i) F[wi][i] = (F[wi][i] - e[wi].value) / x[wi][i];
    }
    return fit;
}

}  // namespace qhyp
