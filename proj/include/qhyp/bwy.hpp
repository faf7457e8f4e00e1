#pragma once
// Bonahon-Wong-Yang invariants of once-punctured torus monodromies:
// Fourier and diagonal matrices, traces of their products, closed-form
// determinants and the normalized invariant T = tr H / det(H)^{1/n}.

#include <map>
#include <string>

#include "qhyp/shapes.hpp"

namespace qhyp {

// Quadratic exponent of the Fourier kernels; odd orders use 2^{-1} mod n, even
// orders the half-exponent of q.
CMat fourier_matrix(char kind, const RootOfUnity& q);
CVec fourier_apply(char kind, const RootOfUnity& q, const CVec& v);
// (-2/n) e^{-c pi i n s(-2a,n)} with c = 3 for L and c = 1 for R (odd n).
Complex fourier_det_closed(char kind, const RootOfUnity& q);

// Diagonal of D_i (odd order): d_i^k (theta_i^{-1}; q^{-2})_k for k = 0..n-1.
// Throws ComputationError if the periodicity d_i^n (theta_i^{-1}; q^{-2})_n = 1 fails.
CVec build_D(size_t i, const MonodromyWord& w, const ShapeSolution& sol, const CVec& th,
             const RootOfUnity& q, long m);

enum class TraceMode { dense, streaming, fft };
std::string trace_mode_name(TraceMode m);
TraceMode parse_trace_mode(const std::string& s);

struct TraceOptions {
    TraceMode mode = TraceMode::streaming;
    int threads = 1;
    // Recompute at half precision and flag relative deviations above 10^{-digits/4}.
    bool monitor = false;
};

struct TraceResult {
    Complex value;
    bool precision_warning = false;
    Real monitor_deviation;  // relative; zero when the monitor is off
};

TraceResult trace_H(const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q,
                    long m, const TraceOptions& opts = {});

// The exact turn t in (-1/2, 1/2] with omega = e(t).
Rational omega_turn(const MonodromyWord& w, const RootOfUnity& q);
Complex det_H_closed(const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q);
// Brute-force determinant of the dense product (test oracle, small n only).
Complex det_H_direct(const MonodromyWord& w, const ShapeSolution& sol, const CVec& th, const RootOfUnity& q,
                     long m);

extern const char* const kRootConvention;
extern const char* const kEvenRootConvention;

struct BwyResult {
    Complex value;  // T
    Complex trace;
    Rational omega;  // turn of omega
    bool precision_warning = false;
};

// Factor-wise n-th root of det H:
//   T = tr H * e(-t/n) * prod_i exp(-(n-1)/(2n) Log z_i) * prod_i D_{q^{-2}}(theta_i^{-1}).
BwyResult bwy_invariant(const MonodromyWord& w, const ShapeSolution& sol, long n, long a, long m,
                        const PrecisionContext& ctx, const TraceOptions& opts = {});
BwyResult bwy_invariant(const MonodromyWord& w, long n, long a, long m, const PrecisionContext& ctx,
                        const TraceOptions& opts = {});

// Decoupled form of T_{LR,m}: (1/n) zeta_6^{(n-1)/(2n)} D_{q^{-2}}(theta^{-1})^2 sigma_m sigma_{-m}.
Complex lr_closed_form(long n, long a, long m, const PrecisionContext& ctx);
// sigma_m = sum_k q^{(k^2-k)/2 + m k} s^k (theta^{-1}; q^{-2})_k with s^n = 1/zeta_6.
CVec lr_sigma_all(long n, long a, const PrecisionContext& ctx);  // sigma_m for m = 0..n-1

struct DescendantTable {
    std::string word;
    RootOfUnity q;
    std::map<long, Complex> values;
    std::string root_convention;
    long ambiguity = 0;
};

// Odd order: m = 0..n-1 via bwy_invariant; even order: m = 0..n/2-1 via bwy_even.
DescendantTable descendant_table(const MonodromyWord& w, const RootOfUnity& q, const PrecisionContext& ctx,
                                 const TraceOptions& opts = {});

// Even order (4 | n) invariant; m is read mod n/2.
Complex bwy_even(const MonodromyWord& w, const ShapeSolution& sol, const RootOfUnity& q, long m,
                 const PrecisionContext& ctx);
Complex bwy_even(const MonodromyWord& w, long n, long a, long half, long m, const PrecisionContext& ctx);

}  // namespace qhyp
