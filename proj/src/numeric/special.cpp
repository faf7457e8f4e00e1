#include "qhyp/numeric.hpp"

#include <cmath>
#include <numeric>

namespace qhyp {

// ---------------------------------------------------------------- modular helpers

long long mod(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

long long mul_mod(long long a, long long b, long long n) {
    __int128 p = static_cast<__int128>(mod(a, n)) * mod(b, n);
    return static_cast<long long>(p % n);
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

long long inv_mod(long long a, long long n) {
    if (n == 1) return 0;
    long long t = 0, nt = 1, r = n, nr = mod(a, n);
    while (nr != 0) {
        long long qq = r / nr;
        long long tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DomainError("element not invertible modulo n");
    return mod(t, n);
}

// ---------------------------------------------------------------- roots of unity

RootOfUnity::RootOfUnity(long a_, long n_) : a(a_), n(n_) {
    if (n <= 0) throw DomainError("root of unity order must be positive");
    if (gcd_ll(a, n) != 1) throw DomainError("root of unity requires gcd(a, n) = 1");
}

RootOfUnity::RootOfUnity(long a_, long n_, long half_) : RootOfUnity(a_, n_) {
    // A = e(half/(2n)) must square to q = e(a/n)
    if (mod(half_ - a, n) != 0) throw DomainError("half-exponent must satisfy half = a (mod n)");
    half = mod(half_, 2 * n);
}

long RootOfUnity::reduced_a() const { return static_cast<long>(mod(a, n)); }

Complex eval_root(const RootOfUnity& r, const PrecisionContext& ctx) {
    Complex z;
    {
        ScopedPrecision sp(ctx);
        z = e_turn(Rational(r.reduced_a(), r.n));
    }
    return z;
}

RootTable::RootTable(long n) : n_(n), w_(static_cast<size_t>(n)) {
    if (n <= 0) throw DomainError("root table order must be positive");
    w_[0] = Complex(1);
    Real step = Real::pi() * Real(2) / Real(n);
    for (long j = 1; 2 * j <= n; ++j) {
        w_[static_cast<size_t>(j)] = expi(step * Real(j));
        if (n - j != j) w_[static_cast<size_t>(n - j)] = w_[static_cast<size_t>(j)].conj();
    }
    if (n % 2 == 0) w_[static_cast<size_t>(n / 2)] = Complex(-1);
    if (n % 4 == 0) {
        w_[static_cast<size_t>(n / 4)] = Complex(Real(0), Real(1));
        w_[static_cast<size_t>(3 * n / 4)] = Complex(Real(0), Real(-1));
    }
}

const Complex& RootTable::power(long a, long long E) const {
    return w_[static_cast<size_t>(mul_mod(a, E, n_))];
}

// ---------------------------------------------------------------- number theory

Rational dedekind_sum(long a, long n) {
    if (n <= 0) throw DomainError("dedekind_sum requires n > 0");
    if (gcd_ll(a, n) != 1) throw DomainError("dedekind_sum requires gcd(a, n) = 1");
    long long x = mod(a, n), y = n;
    Rational result = 0;
    int sign = 1;
    // s(x,y) + s(y,x) = -1/4 + (x/y + y/x + 1/(xy))/12 with s(y mod x, x) = s(y, x)
    while (y > 1) {
        Rational term = Rational(BigInt(x) * x + BigInt(y) * y + 1, BigInt(12) * x * y) - Rational(1, 4);
        if (sign > 0)
            result += term;
        else
            result -= term;
        sign = -sign;
        long long nx = y % x;
        y = x;
        x = nx;
    }
    return result;
}

Rational dedekind_sum_direct(long a, long n) {
    if (n <= 0) throw DomainError("dedekind_sum requires n > 0");
    if (gcd_ll(a, n) != 1) throw DomainError("dedekind_sum requires gcd(a, n) = 1");
    auto saw = [](long long p, long long q) -> Rational {
        long long r = mod(p, q);
        if (r == 0) return Rational(0);
        return Rational(r, q) - Rational(1, 2);
    };
    Rational s = 0;
    for (long k = 1; k < n; ++k) s += saw(k, n) * saw(static_cast<long long>(k) * a, n);
    return s;
}

int jacobi_symbol(long long c, long long d) {
    if (d <= 0 || d % 2 == 0) throw DomainError("jacobi_symbol requires odd positive d");
    long long a = mod(c, d), n = d;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

// ---------------------------------------------------------------- q-series

namespace {
void check_factor(const Complex& f, const char* what) {
    if (abs(f) < singular_threshold())
        throw ComputationError(std::string(what) + ": factor vanishes to working precision");
}
}  // namespace

Complex qpoch(const Complex& x, const Complex& q, long k) {
    if (k == 0) return Complex(1);
    if (k > 0) {
        Complex result(1), qj(1), t;
        Real tmp;
        for (long j = 0; j < k; ++j) {
            mul_into(t, qj, x, tmp);
            Complex f = Complex(1) - t;
            mul_into(t, result, f, tmp);
            std::swap(result, t);
            mul_into(t, qj, q, tmp);
            std::swap(qj, t);
        }
        return result;
    }
    long m = -k;
    Complex qinv = Complex(1) / q;
    Complex prod(1), qj = qinv;
    for (long j = 1; j <= m; ++j) {
        Complex f = Complex(1) - qj * x;
        check_factor(f, "qpoch");
        prod = prod * f;
        qj = qj * qinv;
    }
    return Complex(1) / prod;
}

Complex cyclic_qdilog(const Complex& x, const RootOfUnity& zeta) {
    long n = zeta.n;
    if (n == 1) return Complex(1);
    RootTable tab(n);
    Complex result(1);
    for (long j = 1; j < n; ++j) {
        Complex f = Complex(1) - tab.power(zeta.a, j) * x;
        check_factor(f, "cyclic_qdilog");
        result = result * pow(f, j);
    }
    return result;
}

Complex script_D(const Complex& x, const RootOfUnity& zeta) {
    long n = zeta.n;
    if (n == 1) return Complex(1);
    RootTable tab(n);
    Complex acc(0);
    for (long j = 1; j < n; ++j) {
        Complex f = Complex(1) - tab.power(zeta.a, j) * x;
        check_factor(f, "script_D");
        acc += log(f) * Real(j);
    }
    acc = acc / Real(n);
    Real s(dedekind_sum(zeta.a, n));
    acc.im -= Real::pi() * s;
    return exp(acc);
}

Complex script_D(const Complex& x, const RootOfUnity& zeta, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    return script_D(x, zeta);
}

// ---------------------------------------------------------------- dilogarithms

namespace {

Complex li2_series(const Complex& w) {
    // sum w^k / k^2, |w| < 1/2
    Real eps = pow(Real(2), -current_bits());
    Complex sum(0), wk = w, t;
    Real tmp;
    for (long k = 1;; ++k) {
        Complex term = wk / Real(k * k);
        sum += term;
        if (abs(term) < eps * abs(sum) || k > 100000) break;
        mul_into(t, wk, w, tmp);
        std::swap(wk, t);
    }
    return sum;
}

Complex li2_bernoulli(const Complex& w) {
    // u = -Log(1-w); Li2 = u - u^2/4 + sum_k B_{2k} u^{2k+1}/(2k+1)!
    Complex u = -log(Complex(1) - w);
    Complex u2 = u * u;
    Complex sum = u - u2 / Real(4);
    Real eps = pow(Real(2), -current_bits());
    Real twopi2 = Real::pi() * Real::pi() * Real(4);
    Real scale(1);
    Complex upow = u;
    for (long k = 1; k < 100000; ++k) {
        upow = upow * u2;
        scale /= twopi2;
        Real z;
        mpfr_zeta_ui(z.get(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
        Real c = Real(2) * z * scale / Real(2 * k + 1);
        if (k % 2 == 0) c = -c;
        Complex term = upow * c;
        sum += term;
        if (abs(term) < eps * abs(sum)) break;
    }
    return sum;
}

Complex li2_unit_disk(const Complex& z) {
    // |z| <= 1
    Real half(0.5);
    if (z.re > half) {
        Complex w = Complex(1) - z;
        Real pi2_6 = Real::pi() * Real::pi() / Real(6);
        if (w.re.is_zero() && w.im.is_zero()) return Complex(pi2_6);
        Complex lw = (z.re.is_zero() && z.im.is_zero()) ? Complex(0) : log(z);
        return Complex(pi2_6) - lw * log(w) - li2_unit_disk(w);
    }
    if (abs(z) < half) return li2_series(z);
    return li2_bernoulli(z);
}

}  // namespace

Complex dilog(const Complex& z) {
    ScopedPrecision sp(current_bits() + 32);
    if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
    Real pi2_6 = Real::pi() * Real::pi() / Real(6);
    if (z.im.is_zero() && z.re == Real(1)) return Complex(pi2_6);
    Complex result;
    if (abs(z) > Real(1)) {
        Complex l = log(-z);
        result = Complex(-pi2_6) - l * l / Real(2) - li2_unit_disk(Complex(1) / z);
    } else {
        result = li2_unit_disk(z);
    }
    return result;
}

Real bloch_wigner(const Complex& z) {
    if ((z.re.is_zero() && z.im.is_zero()) || (z.im.is_zero() && z.re == Real(1)))
        throw DomainError("bloch_wigner undefined at 0 and 1");
    Complex l = dilog(z);
    return l.im + arg(Complex(1) - z) * log(abs(z));
}

Complex rogers(const Complex& z) {
    if ((z.re.is_zero() && z.im.is_zero()) || (z.im.is_zero() && z.re == Real(1)))
        throw DomainError("rogers dilogarithm undefined at 0 and 1");
    return dilog(z) + log(z) * log(Complex(1) - z) / Real(2);
}

}  // namespace qhyp
