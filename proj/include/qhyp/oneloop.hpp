#pragma once
// 1-loop invariants at roots of unity: reduction of raw gluing equations to
// NZ data, the finite state sum, and the closed forms for the 4_1 knot.

#include <optional>
#include <string>
#include <utility>

#include "qhyp/bwy.hpp"
#include "qhyp/shapes.hpp"

namespace qhyp {

// (N+2) x N gluing tables: N edge rows, then the meridian row, then the longitude row.
struct RawGluingData {
    IntMat G, Gp, Gpp;
    IntVec eta;  // defaults to (2,...,2,0,0)

    int N() const { return G.empty() ? 0 : static_cast<int>(G[0].size()); }
};

void validate_raw(RawGluingData& raw);  // fills the default eta if empty
RawGluingData raw_41();

enum class ShapeKind { z, zp, zpp };
ShapeKind parse_shape_kind(const std::string& s);

// Keeps the edge rows except `drop_edge` (1-based) plus the chosen curve row
// (placed last), then eliminates one shape per tetrahedron.  The datum's
// (z', z) are the original (z', z), (z, z''), (z'', z') when eliminating
// z'', z', z respectively.
NZDatum reduce_gluing(const RawGluingData& raw, ShapeKind eliminate, int drop_edge, Curve keep,
                      bool halve_longitude);

// Minimal-norm integral (f', f) with A f' + B f = nu, searching f' in a growing box.
std::optional<std::pair<IntVec, IntVec>> find_flattening(const IntMat& A, const IntMat& B, const IntVec& nu,
                                                          int max_radius = 3);

// Datum shapes from original quad shapes z (per tetrahedron) for a given elimination.
std::pair<CVec, CVec> datum_shapes(const CVec& z_original, ShapeKind eliminated);

struct StateSumResult {
    Complex ratio;  // tau_m(zeta) / tau(1)
    Complex tau;    // ratio * tau(1)
    Complex sum;    // sum_k a_{k,m}(theta)
    long n = 1, a = 0, m = 0;
    long ambiguity = 12;
};

constexpr double kStateSumDefaultLimit = 1e6;

// Odd-order state sum; requires n^N <= 1e6 unless allow_large is set.
StateSumResult state_sum(const NZDatum& nz, const CVec& zp, const CVec& z, const RootOfUnity& zeta, long m,
                         const PrecisionContext& ctx, bool allow_large = false);

// n^{-N/2} prod_i D_{zeta^{-1}}(theta_i^{-1}) M^{-(n-1)/(2n)}, M = prod z_i^{f'_i} z'_i^{-f_i}:
// the factor with tau_m(zeta)/tau(1) = prefactor * sum.
Complex state_sum_prefactor(const NZDatum& nz, const CVec& zp, const CVec& z, const RootOfUnity& zeta);

// tau_m(zeta)/tau(1) at zeta = q^2, q = e(a/n), for the longitude datum of a word,
// with the state sum replaced by n^{N/2} tr H (any trace mode).
Complex one_loop_ratio_via_trace(const MonodromyWord& w, const ShapeSolution& sol, long n, long a, long m,
                                 const PrecisionContext& ctx, const TraceOptions& opts = {},
                                 bool* precision_warning = nullptr);

Complex tau_41_meridian(long n, long a, long m, const PrecisionContext& ctx);
Complex tau_41_longitude(long n, long a, long m, const PrecisionContext& ctx);

}  // namespace qhyp
