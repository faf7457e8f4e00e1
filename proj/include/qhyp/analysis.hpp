#pragma once
// Consistency checks and asymptotic analysis: root-of-unity matching, the
// Fourier check for 4_1, universal denominators, extrapolation of asymptotic
// series from invariant samples, q-difference recurrences and the WKB tables.

#include <optional>
#include <string>
#include <vector>

#include "qhyp/bwy.hpp"
#include "qhyp/oneloop.hpp"

namespace qhyp {

// ---------------------------------------------------------------- roots

struct RootMatch {
    bool ok = false;
    long index = 0;   // j with x/y ~ e(j/order), in [0, order)
    Real deviation;   // max(| |x/y| - 1 |, |phase - 2 pi j/order|)
};

// Requires y != 0 (DomainError otherwise).
RootMatch equal_up_to_root(const Complex& x, const Complex& y, long order, const Real& tol);

// ---------------------------------------------------------------- Fourier check

struct FourierRow {
    long m = 0;
    Complex lhs;  // n^{-1/2} sum_l q^{2 m l} T_{LR,l}(q)
    Complex rhs;  // tau_{4_1,mu,m}(zeta^2) / tau_mu(1)
    long root_index = 0;
    Real residual;
    bool zero_match = false;  // both sides below the zero threshold
    bool ok = false;
};

struct FourierCheckResult {
    long n = 1, a = 1;
    std::vector<FourierRow> rows;
    Real max_residual;
    Real unitarity_residual;  // || DFT^{-1} DFT v - v || / ||v||
    bool passed = false;
};

// Odd n.  The BWY side shares one det-root for all l (it is l-independent).
FourierCheckResult fourier_check_41(long n, long a, const PrecisionContext& ctx);

// ---------------------------------------------------------------- denominators

BigInt universal_denominator(long k);

// ---------------------------------------------------------------- extrapolation

struct Sample {
    long n = 0;
    Complex value;
};

struct FitCoefficient {
    Complex value;     // estimate from the better window
    Real spread;       // |window 1 - window 2|
    int degree = 0;    // Neville degree selected in the better window
    bool converged = false;  // spread < 1e-12 |value|
};

struct AsymptoticFit {
    Complex v;                   // value used for the exponential factor
    Complex v_fit;               // v estimated from the samples
    Real v_spread;
    std::vector<FitCoefficient> coeffs;  // series in 1/n
    std::string n_range;
};

struct ExtrapolationOptions {
    int terms = 5;
    // Exponential growth to divide out; when unset the fitted v is used.
    std::optional<Complex> v_reference;
    // Samples are split by n mod window_modulus into two disjoint windows
    // (residues 1 and 3 by default).
    long window_modulus = 4;
};

// Samples at consecutive odd n of G(n) ~ exp(v/2 (n - 1/n)) sum_k c_k n^{-k}.
// Throws DomainError if fewer than 2K+8 samples are given.
AsymptoticFit extrapolate(const std::vector<Sample>& samples, const ExtrapolationOptions& opts);

// ---------------------------------------------------------------- asymptotic drivers

// x + y sqrt(d) with integers x, y (d = 1 for plain integers, d = -7 for LLR).
struct QuadraticInteger {
    BigInt x, y;
    long d = 1;
    std::string str() const;
};

struct RecoveredCoefficient {
    int k = 0;
    Complex cleared;          // c_k / tau(1) * D_k * (s / h0)^k
    QuadraticInteger nearest;
    Real distance;
    bool recovered = false;   // distance < 1e-6 and the fit converged
};

struct AsymptoticReport {
    std::string word;
    AsymptoticFit fit;
    Complex v_exact;
    Real v_error;  // |v_fit - v_exact|
    std::vector<RecoveredCoefficient> recovered;
};

// Bimodal denominators T(e(-n/4)) and the LLR correction delta_n.
Real lr_bimodal_denominator(long n);
Complex llr_bimodal_denominator(long n);
Complex llr_delta(long n);
Complex lr_growth_rate(const PrecisionContext& ctx);   // Vol_{4_1} / (2 pi)
Complex llr_growth_rate(const PrecisionContext& ctx);  // V_C / (2 pi i)

// Normalized samples G(n) used by the fits (tau(1) is not divided out):
// LR:  T_{LR,m}(e(1/n)) / T_LR(e(-n/4));   LLR: T_LLR(e(1/n)) / (delta_n T_LLR(e(-n/4))).
Complex lr_sample(long n, long m, const PrecisionContext& ctx);
Complex llr_sample(long n, const PrecisionContext& ctx, const TraceOptions& opts = {});

// Exact integers/quadratic integers from a fit:  a_k = c_k / tau(1) * D_k * (s/h0)^k
// with h0 = 4 pi i and s = 3 sqrt(-3) (LR) or 56 sqrt(-7) (LLR).
AsymptoticReport recover_lr(const std::vector<Sample>& samples, int terms, const PrecisionContext& ctx);
AsymptoticReport recover_llr(const std::vector<Sample>& samples, int terms, const PrecisionContext& ctx);

// ---------------------------------------------------------------- sample cache

// Text file, one row per sample: n a m re_mantissa re_exponent im_mantissa im_exponent.
struct CachedSample {
    long n = 0, a = 1, m = 0;
    Complex value;
};
std::vector<CachedSample> load_samples(const std::string& path);
void save_samples(const std::string& path, const std::vector<CachedSample>& rows, int digits);

// ---------------------------------------------------------------- recurrences

struct RecurrenceResult {
    Real max_residual;
    std::vector<long> skipped;  // m with a vanishing leading coefficient
};

// q S_{m+1} + (q^{-4m} - q - q^{-1}) S_m + q^{-1} S_{m-1} = 0 with S_m = theta^m sigma_{2m}.
RecurrenceResult verify_sigma_recurrence(long n, long a, const PrecisionContext& ctx);
// Fourth order relation on T_{LR,2m}(q).
RecurrenceResult verify_T_recurrence(long n, long a, const PrecisionContext& ctx);
// The five coefficients of the fourth order relation at q (index j multiplies T_{m+j}).
std::vector<Complex> t_recurrence_coefficients(const RootTable& tab, long a, long m);

// ---------------------------------------------------------------- WKB

// Polynomials in m with rational coefficients; index = power of m.
using RationalPoly = std::vector<Rational>;

struct WkbTables {
    std::vector<BigInt> a;  // a_0..a_20
    std::vector<BigInt> b;  // b_1..b_7 at indices 1..7 (b[0] = 0)
    std::vector<RationalPoly> f, g;  // f_0..f_3, g_0..g_3
    std::vector<BigInt> D;  // D_0..D_20
};
WkbTables wkb_tables();

Complex eval_poly(const RationalPoly& p, long m);
// c_l(m) = sum_k at_{l-2k} f_k(m) + sum_k bt_{l-2k} g_k(m), coefficient of (2 pi i / n)^l.
Complex wkb_coefficient(const WkbTables& t, int l, long m);

struct WkbEntry {
    long m = 0;
    int l = 0;
    Complex fitted, predicted;
    Real rel_error;
    bool ok = false;
};
struct WkbReport {
    std::vector<WkbEntry> entries;
    bool passed = false;
};

// fits[m] is the fit of T_{LR,2m}(e(1/n)) / T_LR(e(-n/4)) for m = 0..fits.size()-1.
WkbReport wkb_check(const std::vector<AsymptoticFit>& fits, const WkbTables& tables, int max_l, const Real& tol);

}  // namespace qhyp
