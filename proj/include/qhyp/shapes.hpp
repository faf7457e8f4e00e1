#pragma once
// Geometric solutions of the gluing equations, n-th roots of shapes, volumes
// and the torsion normalization tau(1).

#include <cstdint>
#include <string>

#include "qhyp/monodromy.hpp"

namespace qhyp {

// Newton converged, but to a solution with some Im z_i <= 0.
class NonGeometricSolution : public ComputationError {
public:
    using ComputationError::ComputationError;
};

struct ShapeSolution {
    std::string word;  // normalized letters, empty for solutions of an NZ datum
    CVec zp, z, zpp;
    Real residual;
    int attempts = 0;  // starting points tried (1 = default guess)
};

// Seed of the random restarts tried after the default guess e(1/6).
constexpr std::uint64_t kDefaultNewtonSeed = 0x5eed;

// Solves Q Log z' + 2 Log z = pi i eta with z = 1 - 1/z' (principal logs).
ShapeSolution solve_geometric(const MonodromyWord& w, const PrecisionContext& ctx,
                              std::uint64_t seed = kDefaultNewtonSeed);
// Solves A Log z' + B Log z = pi i nu for an arbitrary NZ datum.
ShapeSolution solve_nz(const NZDatum& nz, const PrecisionContext& ctx, std::uint64_t seed = kDefaultNewtonSeed);

// theta_i = exp(Log(z'_i) / n).
CVec thetas(const ShapeSolution& sol, long n);

Real volume(const ShapeSolution& sol);

// Complexified volume of the LLR mapping torus (rejects other words).
Complex complexified_volume_llr(const ShapeSolution& sol);

// 1 / sqrt(det(A diag(z) + B diag(1/z')) z'^f z^{-f'}), principal root.
Complex tau_one(const NZDatum& nz, const CVec& zp, const CVec& z);
Complex tau_one(const NZDatum& nz, const ShapeSolution& sol);

// Max over tetrahedra of |z z' z'' + 1| and |1/z + z'' - 1|.
Real shape_relation_defect(const ShapeSolution& sol);

}  // namespace qhyp
