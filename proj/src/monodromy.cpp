#include "qhyp/monodromy.hpp"

#include <algorithm>
#include <cctype>

namespace qhyp {

std::string MonodromyWord::format() const { return (sign < 0 ? "-" : "") + letters; }

int MonodromyWord::count(char c) const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), c));
}

MonodromyWord parse_word(const std::string& text, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    std::string s = text;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = -sign;
        s.erase(0, 1);
    }
    if (s.empty()) throw DomainError("empty monodromy word");
    for (char& c : s) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (c != 'L' && c != 'R') throw DomainError(std::string("invalid letter '") + c + "' in monodromy word");
    }
    if (s.size() < 2 || s.find('L') == std::string::npos || s.find('R') == std::string::npos)
        throw DomainError("word is not pseudo-Anosov");
    size_t n = s.size();
    for (size_t r = 0; r < n; ++r) {
        if (s[r] == 'L' && s[(r + n - 1) % n] == 'R') {
            MonodromyWord w;
            w.letters = s.substr(r) + s.substr(0, r);
            w.sign = sign;
            w.rotation = static_cast<int>(r);
            return w;
        }
    }
    throw DomainError("word is not pseudo-Anosov");
}

std::string curve_name(Curve c) {
    switch (c) {
        case Curve::longitude: return "longitude";
        case Curve::meridian: return "meridian";
        default: return "custom";
    }
}

Curve parse_curve(const std::string& s) {
    if (s == "longitude" || s == "lambda") return Curve::longitude;
    if (s == "meridian" || s == "mu") return Curve::meridian;
    if (s == "custom") return Curve::custom;
    throw DomainError("unknown curve label: " + s);
}

bool scaled_unimodular(const IntMat& B, int d) {
    if (d <= 0) return false;
    RatMat b(B.size());
    for (size_t i = 0; i < B.size(); ++i) {
        b[i].resize(B[i].size());
        for (size_t j = 0; j < B[i].size(); ++j) {
            if (B[i][j] % d != 0) return false;
            b[i][j] = Rational(B[i][j] / d);
        }
    }
    Rational det = determinant(b);
    return det == 1 || det == -1;
}

void validate_nz(const NZDatum& nz, bool require_unimodular) {
    size_t N = static_cast<size_t>(nz.N);
    auto square = [N](const IntMat& m) {
        if (m.size() != N) return false;
        for (const auto& r : m)
            if (r.size() != N) return false;
        return true;
    };
    if (nz.N <= 0) throw DomainError("NZ datum needs N > 0");
    if (!square(nz.A) || !square(nz.B)) throw DomainError("NZ datum matrices must be N x N");
    if (nz.nu.size() != N || nz.f.size() != N || nz.fp.size() != N)
        throw DomainError("NZ datum vectors must have length N");
    if (!is_symmetric(matmul(nz.A, transpose(nz.B)))) throw DomainError("A B^t is not symmetric");
    if (require_unimodular && !scaled_unimodular(nz.B, nz.d)) throw DomainError("B/d is not unimodular");
    IntVec lhs = matvec(nz.A, nz.fp);
    IntVec fb = matvec(nz.B, nz.f);
    for (size_t i = 0; i < N; ++i)
        if (lhs[i] + fb[i] != nz.nu[i]) throw DomainError("flattening does not satisfy A f' + B f = nu");
}

NZDatum nz_longitude(const MonodromyWord& w) {
    int N = static_cast<int>(w.size());
    NZDatum nz;
    nz.N = N;
    nz.A = int_zeros(N, N);
    nz.B = int_zeros(N, N);
    nz.nu.assign(N, 0);
    nz.d = 2;
    nz.fp.assign(N, 1);
    nz.f.assign(N, 0);
    nz.curve = Curve::longitude;
    auto at = [N](int i) { return ((i % N) + N) % N; };
    for (int i = 0; i + 1 < N; ++i) {
        char c = w[i];
        int k = 1;
        while (w[at(i + k)] != c) ++k;
        nz.A[i][at(i - 1)] += 1;
        nz.A[i][at(i + k)] += 1;
        int b = (c == 'L') ? 2 : -2;
        for (int j = 0; j < k; ++j) {
            nz.B[i][at(i + j)] += b;
            if (c == 'R') nz.A[i][at(i + j)] += -2;
        }
        nz.nu[i] = (c == 'L') ? 2 : 2 - 2 * k;
    }
    int last = N - 1;
    nz.A[last][at(last - 1)] += -1;
    nz.A[last][last] += 1;
    nz.A[last][0] += 1;
    nz.B[last][last] += 2;
    nz.nu[last] = 1;
    return nz;
}

IntVec beta_by_rule(const MonodromyWord& w) {
    size_t N = w.size();
    IntVec beta(N, 0);
    for (size_t i = 0; i < N; ++i) {
        char a = w[i], b = w[(i + 1) % N];
        if (a == 'L' && b == 'R') beta[i] = -1;
        if (a == 'R' && b == 'L') beta[i] = 1;
    }
    return beta;
}

LayeredData layered_data(const MonodromyWord& w) {
    NZDatum nz = nz_longitude(w);
    size_t N = w.size();
    RatMat B = to_rational(nz.B);
    auto Binv = inverse(B);
    if (!Binv) throw ComputationError("layered B matrix is singular");
    RatMat Bi2 = *Binv;
    for (auto& row : Bi2)
        for (auto& x : row) x *= 2;
    LayeredData ld;
    RatMat Q = matmul(Bi2, to_rational(nz.A));
    RatVec nu(N);
    for (size_t i = 0; i < N; ++i) nu[i] = Rational(nz.nu[i]);
    RatVec eta = matvec(Bi2, nu);
    if (!is_integral(Q) || !is_integral(eta)) throw ComputationError("Q or eta is not integral");
    ld.Q = to_integer(Q);
    ld.eta = to_integer(eta);
    // (B/2) beta = e_N
    RatVec eN(N, Rational(0));
    eN[N - 1] = 1;
    RatVec beta = matvec(Bi2, eN);
    if (!is_integral(beta)) throw ComputationError("beta is not integral");
    ld.beta = to_integer(beta);
    ld.ell.assign(N, 0);
    for (size_t i = 0; i < N; ++i) ld.ell[i] = (w[i] == 'L') ? 1 : 0;
    MeridianRow m;
    m.G.assign(N, 0);
    m.Gp.assign(N, 0);
    m.Gpp.assign(N, 0);
    for (size_t i = 0; i < N; ++i) {
        size_t prev = (i + N - 1) % N;
        if (w[i] == 'L')
            m.Gpp[prev] += 1;
        else
            m.G[prev] -= 1;
    }
    if (w.sign < 0) {
        for (size_t i = 0; i < N; ++i) {
            m.G[i] *= 2;
            m.Gp[i] *= 2;
            m.Gpp[i] *= 2;
        }
    }
    ld.meridian = m;
    return ld;
}

}  // namespace qhyp
