#pragma once
// Arbitrary-precision real/complex arithmetic over MPFR and the special
// functions used by the invariant computations.

#include <mpfr.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhyp {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Raised when an input violates a documented precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computation cannot proceed (singular factor, non-convergence, ...).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrecisionContext {
    int digits = 60;
    int guard = 15;

    PrecisionContext() = default;
    PrecisionContext(int d, int g = 15);

    // Working precision in bits for digits+guard decimal digits.
    long working_bits() const;
    // Precision in bits for exactly `digits` decimal digits.
    long report_bits() const;
};

long decimal_to_bits(double digits);

// Current thread-local working precision in bits.
long current_bits();

// Sets the thread-local working precision for its lifetime.
class ScopedPrecision {
public:
    explicit ScopedPrecision(const PrecisionContext& ctx);
    explicit ScopedPrecision(long bits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    long saved_;
    int saved_digits_;
};

class Real {
public:
    Real();
    Real(int x);
    Real(long x);
    Real(long long x);
    Real(double x);
    explicit Real(const std::string& decimal);
    explicit Real(const Rational& r);
    explicit Real(const BigInt& z);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    long precision() const { return mpfr_get_prec(v_); }

    static Real pi();
    static Real zero() { return Real(0); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Decimal exponent e with |x| = m * 10^e, 1 <= |m| < 10 (0 for zero).
    long decimal_exponent() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real floor(const Real& x);
Real round(const Real& x);
Real ten_pow(long k);  // 10^k
Real max(const Real& a, const Real& b);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}

    static Complex i() { return Complex(Real(0), Real(1)); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }
    Complex conj() const { return Complex(re, -im); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // principal, in (-pi, pi]
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long k);
Complex pow(const Complex& z, const Complex& w);  // exp(w Log z)
Complex root(const Complex& z, long n);            // exp(Log z / n)
Complex expi(const Real& t);                       // e^{i t}
Complex e_turn(const Rational& x);                 // e(x) = exp(2 pi i x)
Complex e_turn(long num, long den);

// In-place kernels for hot loops: out = a*b, out += a*b.  `out` must not alias.
void mul_into(Complex& out, const Complex& a, const Complex& b, Real& tmp);
void fma_into(Complex& acc, const Complex& a, const Complex& b, Real& t1, Real& t2);

// Decimal serialization: value = mantissa * 10^exponent with 1 <= |mantissa| < 10.
struct DecimalString {
    std::string mantissa;  // e.g. "-4.0108263579"
    long exponent = 0;
    std::string str() const;  // "<mantissa>e<exponent>"
};
DecimalString to_decimal(const Real& x, int digits);
std::string to_string(const Real& x, int digits);
std::string to_string(const Complex& z, int digits);
Real parse_real(const std::string& s);

// ---------------------------------------------------------------- roots of unity

struct RootOfUnity {
    long a = 0;
    long n = 1;
    std::optional<long> half;

    RootOfUnity() = default;
    RootOfUnity(long a_, long n_);
    RootOfUnity(long a_, long n_, long half_);

    long reduced_a() const;  // a mod n in [0, n)
};

Complex eval_root(const RootOfUnity& r, const PrecisionContext& ctx);

// Table of e(j/n), j = 0..n-1, at the working precision.
class RootTable {
public:
    explicit RootTable(long n);
    long order() const { return n_; }
    const Complex& operator[](long j) const { return w_[static_cast<size_t>(j)]; }
    // e(a*E/n) for arbitrary integers a, E.
    const Complex& power(long a, long long E) const;

private:
    long n_;
    std::vector<Complex> w_;
};

long long mod(long long x, long long n);
long long mul_mod(long long a, long long b, long long n);
long long inv_mod(long long a, long long n);
long long gcd_ll(long long a, long long b);

// ---------------------------------------------------------------- number theory

Rational dedekind_sum(long a, long n);
Rational dedekind_sum_direct(long a, long n);
int jacobi_symbol(long long c, long long d);

// ---------------------------------------------------------------- q-series

// (x; q)_k for any integer k (negative k via (x;q)_{-m} = 1/prod_{j=1}^m (1 - q^{-j} x)).
Complex qpoch(const Complex& x, const Complex& q, long k);

// D_zeta(x) = prod_{j=1}^{n-1} (1 - zeta^j x)^j.
Complex cyclic_qdilog(const Complex& x, const RootOfUnity& zeta);

// exp(-i pi s(a,n) + sum_{j=1}^{n-1} (j/n) Log(1 - zeta^j x)).
Complex script_D(const Complex& x, const RootOfUnity& zeta);
Complex script_D(const Complex& x, const RootOfUnity& zeta, const PrecisionContext& ctx);

// ---------------------------------------------------------------- dilogarithms

Complex dilog(const Complex& z);
Real bloch_wigner(const Complex& z);
Complex rogers(const Complex& z);

// Threshold 10^{-digits} used for near-singular factors.
Real singular_threshold();

}  // namespace qhyp
