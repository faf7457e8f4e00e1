#include "qhyp/numeric.hpp"

#include <cmath>
#include <cstring>

namespace qhyp {

namespace {
thread_local long g_bits = 300;
thread_local int g_digits = 60;

bool alive(mpfr_srcptr v) { return v->_mpfr_d != nullptr; }
}  // namespace

PrecisionContext::PrecisionContext(int d, int g) : digits(d), guard(g) {
    if (d < 1) throw DomainError("precision digits must be positive");
    if (g < 0) throw DomainError("guard digits must be non-negative");
}

long decimal_to_bits(double digits) {
    return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 2;
}

long PrecisionContext::working_bits() const { return decimal_to_bits(digits + guard); }
long PrecisionContext::report_bits() const { return decimal_to_bits(digits); }

long current_bits() { return g_bits; }

ScopedPrecision::ScopedPrecision(const PrecisionContext& ctx) : saved_(g_bits), saved_digits_(g_digits) {
    g_bits = ctx.working_bits();
    g_digits = ctx.digits;
}

ScopedPrecision::ScopedPrecision(long bits) : saved_(g_bits), saved_digits_(g_digits) {
    if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
    g_bits = bits;
    int d = static_cast<int>(bits * 0.30102999566398120) - 15;
    g_digits = d < 10 ? 10 : d;
}

ScopedPrecision::~ScopedPrecision() {
    g_bits = saved_;
    g_digits = saved_digits_;
}

Real singular_threshold() { return ten_pow(-g_digits); }

// ---------------------------------------------------------------- Real

Real::Real() {
    mpfr_init2(v_, g_bits);
    mpfr_set_zero(v_, 1);
}
Real::Real(int x) : Real(static_cast<long>(x)) {}
Real::Real(long x) {
    mpfr_init2(v_, g_bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
}
Real::Real(long long x) {
    mpfr_init2(v_, g_bits);
    mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN);
}
Real::Real(double x) {
    mpfr_init2(v_, g_bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
}
Real::Real(const std::string& decimal) {
    mpfr_init2(v_, g_bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("malformed decimal number: " + decimal);
}
Real::Real(const BigInt& z) {
    mpfr_init2(v_, g_bits);
    std::string s = z.str();
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
}
Real::Real(const Rational& r) {
    mpfr_init2(v_, g_bits);
    Real num(boost::multiprecision::numerator(r));
    Real den(boost::multiprecision::denominator(r));
    mpfr_div(v_, num.v_, den.v_, MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    std::memcpy(v_, o.v_, sizeof(mpfr_t));
    o.v_->_mpfr_d = nullptr;
}
Real& Real::operator=(const Real& o) {
    if (this == &o) return *this;
    if (!alive(v_)) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
    } else if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    }
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    if (!alive(v_)) {
        // swap with a moved-from source: keep *this valid
        mpfr_init2(v_, g_bits);
        mpfr_set_zero(v_, 1);
    }
    return *this;
}
Real::~Real() {
    if (alive(v_)) mpfr_clear(v_);
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

long Real::decimal_exponent() const {
    if (mpfr_zero_p(v_)) return 0;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 3, v_, MPFR_RNDN);
    mpfr_free_str(s);
    return static_cast<long>(e) - 1;
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real Real::operator-() const {
    Real r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define QHYP_BINOP(op, fn)                              \
    Real operator op(const Real& a, const Real& b) {    \
        Real r;                                         \
        fn(r.get(), a.get(), b.get(), MPFR_RNDN);       \
        return r;                                       \
    }
QHYP_BINOP(+, mpfr_add)
QHYP_BINOP(-, mpfr_sub)
QHYP_BINOP(*, mpfr_mul)
QHYP_BINOP(/, mpfr_div)
#undef QHYP_BINOP

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

#define QHYP_UNARY(name, fn)          \
    Real name(const Real& x) {        \
        Real r;                       \
        fn(r.get(), x.get(), MPFR_RNDN); \
        return r;                     \
    }
QHYP_UNARY(abs, mpfr_abs)
QHYP_UNARY(sqrt, mpfr_sqrt)
QHYP_UNARY(exp, mpfr_exp)
QHYP_UNARY(log, mpfr_log)
QHYP_UNARY(log10, mpfr_log10)
QHYP_UNARY(sin, mpfr_sin)
QHYP_UNARY(cos, mpfr_cos)
#undef QHYP_UNARY

Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.get(), x.get());
    return r;
}
Real round(const Real& x) {
    Real r;
    mpfr_round(r.get(), x.get());
    return r;
}
Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}
Real pow(const Real& x, const Real& y) {
    Real r;
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}
Real pow(const Real& x, long k) {
    Real r;
    mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}
Real ten_pow(long k) {
    Real r(10);
    mpfr_pow_si(r.get(), r.get(), k, MPFR_RNDN);
    return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// ---------------------------------------------------------------- Complex

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}
Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
Complex& Complex::operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    *this = *this / o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
    Complex r;
    Real t;
    mul_into(r, a, b, t);
    return r;
}
Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    if (d.is_zero()) throw ComputationError("complex division by zero");
    Complex r(a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im);
    r.re /= d;
    r.im /= d;
    return r;
}
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }

void mul_into(Complex& out, const Complex& a, const Complex& b, Real& tmp) {
    mpfr_mul(tmp.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fms(out.re.get(), a.re.get(), b.re.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(out.im.get(), a.re.get(), b.im.get(), tmp.get(), MPFR_RNDN);
}

void fma_into(Complex& acc, const Complex& a, const Complex& b, Real& t1, Real& t2) {
    mpfr_mul(t1.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fms(t2.get(), a.re.get(), b.re.get(), t1.get(), MPFR_RNDN);
    mpfr_add(acc.re.get(), acc.re.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(t2.get(), a.re.get(), b.im.get(), t1.get(), MPFR_RNDN);
    mpfr_add(acc.im.get(), acc.im.get(), t2.get(), MPFR_RNDN);
}

Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) {
    if (z.im.is_zero()) {
        if (z.re.sign() < 0) return Real::pi();
        return Real(0);
    }
    return atan2(z.im, z.re);
}
Complex exp(const Complex& z) {
    Real m = exp(z.re);
    Real s, c;
    mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
    return Complex(m * c, m * s);
}
Complex log(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) throw ComputationError("logarithm of zero");
    return Complex(log(abs(z)), arg(z));
}
Complex sqrt(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
    Real r = abs(z);
    if (z.re.sign() >= 0) {
        Real t = sqrt((r + z.re) / Real(2));
        return Complex(t, z.im / (Real(2) * t));
    }
    Real t = sqrt((r - z.re) / Real(2));
    Real u = abs(z.im) / (Real(2) * t);
    if (z.im.sign() < 0) return Complex(u, -t);
    return Complex(u, t);
}
Complex pow(const Complex& z, long k) {
    if (k < 0) return Complex(1) / pow(z, -k);
    Complex result(1), base = z;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}
Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }
Complex root(const Complex& z, long n) { return exp(log(z) / Real(n)); }
Complex expi(const Real& t) {
    Complex r;
    mpfr_sin_cos(r.im.get(), r.re.get(), t.get(), MPFR_RNDN);
    return r;
}
Complex e_turn(const Rational& x) {
    // reduce to [0, 1)
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt r = num % den;
    if (r < 0) r += den;
    if (r == 0) return Complex(1);
    if (2 * r == den) return Complex(-1);
    if (4 * r == den) return Complex(Real(0), Real(1));
    if (4 * r == 3 * den) return Complex(Real(0), Real(-1));
    Real t = Real::pi() * Real(2) * Real(r) / Real(den);
    return expi(t);
}
Complex e_turn(long num, long den) { return e_turn(Rational(num, den)); }

// ---------------------------------------------------------------- serialization

std::string DecimalString::str() const { return mantissa + "e" + std::to_string(exponent); }

DecimalString to_decimal(const Real& x, int digits) {
    DecimalString out;
    if (mpfr_nan_p(x.get())) {
        out.mantissa = "nan";
        return out;
    }
    if (mpfr_inf_p(x.get())) {
        out.mantissa = x.sign() < 0 ? "-inf" : "inf";
        return out;
    }
    if (x.is_zero()) {
        out.mantissa = "0";
        return out;
    }
    if (digits < 1) digits = 1;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.get(), MPFR_RNDN);
    std::string d(s);
    mpfr_free_str(s);
    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    // strip trailing zeros but keep one digit
    while (d.size() > 1 && d.back() == '0') d.pop_back();
    out.mantissa = sign + d.substr(0, 1);
    if (d.size() > 1) out.mantissa += "." + d.substr(1);
    out.exponent = static_cast<long>(e) - 1;
    return out;
}

std::string to_string(const Real& x, int digits) { return to_decimal(x, digits).str(); }

std::string to_string(const Complex& z, int digits) {
    std::string s = to_string(z.re, digits);
    std::string t = to_string(z.im, digits);
    if (t[0] == '-') return s + " - " + t.substr(1) + "i";
    return s + " + " + t + "i";
}

Real parse_real(const std::string& s) { return Real(s); }

}  // namespace qhyp
