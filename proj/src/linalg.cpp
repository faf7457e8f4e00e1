#include "qhyp/linalg.hpp"

namespace qhyp {

IntMat int_zeros(size_t rows, size_t cols) { return IntMat(rows, IntVec(cols, 0)); }

IntMat int_identity(size_t n) {
    IntMat m = int_zeros(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t = int_zeros(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    IntMat c = int_zeros(a.size(), b.empty() ? 0 : b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IntVec matvec(const IntMat& a, const IntVec& v) {
    IntVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

bool is_symmetric(const IntMat& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

RatMat to_rational(const IntMat& a) {
    RatMat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i].resize(a[i].size());
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = Rational(a[i][j]);
    }
    return r;
}

RatMat matmul(const RatMat& a, const RatMat& b) {
    size_t cols = b.empty() ? 0 : b[0].size();
    RatMat c(a.size(), RatVec(cols, Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RatVec matvec(const RatMat& a, const RatVec& v) {
    RatVec r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

Rational determinant(const RatMat& a0) {
    RatMat a = a0;
    size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::optional<RatMat> inverse(const RatMat& a0) {
    size_t n = a0.size();
    RatMat a = a0;
    RatMat inv(n, RatVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    return matvec(*inv, b);
}

bool is_integral(const RatMat& a) {
    for (const auto& row : a)
        if (!is_integral(row)) return false;
    return true;
}

bool is_integral(const RatVec& v) {
    for (const auto& x : v)
        if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

IntMat to_integer(const RatMat& a) {
    IntMat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = to_integer(a[i]);
    return r;
}

IntVec to_integer(const RatVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (boost::multiprecision::denominator(v[i]) != 1) throw DomainError("matrix is not integral");
        r[i] = static_cast<long long>(boost::multiprecision::numerator(v[i]));
    }
    return r;
}

Complex determinant(CMat a) {
    size_t n = a.size();
    Complex det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        Real best = abs(a[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            Real v = abs(a[r][c]);
            if (v > best) {
                best = v;
                p = r;
            }
        }
        if (best.is_zero()) return Complex(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det = det * a[c][c];
        Complex inv = Complex(1) / a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Complex f = a[r][c] * inv;
            for (size_t j = c + 1; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

CMat matmul(const CMat& a, const CMat& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    CMat c(n, CVec(m, Complex(0)));
    Real t1, t2;
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < m; ++j) fma_into(c[i][j], a[i][k], b[k][j], t1, t2);
    return c;
}

CVec solve(CMat a, CVec b) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        Real best = abs(a[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            Real v = abs(a[r][c]);
            if (v > best) {
                best = v;
                p = r;
            }
        }
        if (best.is_zero()) throw ComputationError("singular linear system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        Complex inv = Complex(1) / a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Complex f = a[r][c] * inv;
            for (size_t j = c + 1; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    CVec x(n, Complex(0));
    for (size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace qhyp
