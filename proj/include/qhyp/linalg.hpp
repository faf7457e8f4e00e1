#pragma once
// Small exact integer/rational matrices and dense complex helpers.

#include <optional>
#include <vector>

#include "qhyp/numeric.hpp"

namespace qhyp {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using CVec = std::vector<Complex>;
using CMat = std::vector<CVec>;

IntMat int_zeros(size_t rows, size_t cols);
IntMat int_identity(size_t n);
IntMat transpose(const IntMat& a);
IntMat matmul(const IntMat& a, const IntMat& b);
IntVec matvec(const IntMat& a, const IntVec& v);
bool is_symmetric(const IntMat& a);

RatMat to_rational(const IntMat& a);
RatMat matmul(const RatMat& a, const RatMat& b);
RatVec matvec(const RatMat& a, const RatVec& v);
Rational determinant(const RatMat& a);
std::optional<RatMat> inverse(const RatMat& a);
// Solves a x = b exactly; nullopt if a is singular.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

bool is_integral(const RatMat& a);
bool is_integral(const RatVec& v);
IntMat to_integer(const RatMat& a);  // throws DomainError if not integral
IntVec to_integer(const RatVec& v);

// Dense complex determinant by Gaussian elimination with partial pivoting.
Complex determinant(CMat a);
CMat matmul(const CMat& a, const CMat& b);
// Solves a x = b with partial pivoting; throws ComputationError if singular.
CVec solve(CMat a, CVec b);

}  // namespace qhyp
