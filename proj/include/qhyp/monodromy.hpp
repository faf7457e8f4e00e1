#pragma once
// Monodromy words of the once-punctured torus and the combinatorics of their
// layered triangulations (Neumann-Zagier data, Q, eta, beta, meridian row).

#include <string>

#include "qhyp/linalg.hpp"

namespace qhyp {

struct MonodromyWord {
    std::string letters;  // normalized: starts with L, ends with R
    int sign = +1;
    int rotation = 0;  // letters = input rotated left by `rotation`

    size_t size() const { return letters.size(); }
    char operator[](size_t i) const { return letters[i]; }
    std::string format() const;  // "LLR" or "-LLR"
    int count(char c) const;
    // Same conjugacy representative and sign (rotation is bookkeeping only).
    bool operator==(const MonodromyWord& o) const { return letters == o.letters && sign == o.sign; }
};

// Accepts a case-insensitive string over {L, R} with an optional leading '-'.
// The explicit `sign` argument is multiplied with a leading '-'.
MonodromyWord parse_word(const std::string& text, int sign = +1);

enum class Curve { longitude, meridian, custom };
std::string curve_name(Curve c);
Curve parse_curve(const std::string& s);

struct NZDatum {
    int N = 0;
    IntMat A, B;
    IntVec nu;
    int d = 1;
    IntVec f, fp;
    Curve curve = Curve::custom;
};

// Throws DomainError naming the first violated invariant.
void validate_nz(const NZDatum& nz, bool require_unimodular = true);
// True if B/d is an integer matrix with determinant +-1.
bool scaled_unimodular(const IntMat& B, int d);

NZDatum nz_longitude(const MonodromyWord& w);

struct MeridianRow {
    IntVec G, Gp, Gpp;  // exponents of z, z', z'' per tetrahedron
};

struct LayeredData {
    IntMat Q;
    IntVec eta;
    IntVec beta;
    IntVec ell;  // 1 for L, 0 for R
    MeridianRow meridian;
};

LayeredData layered_data(const MonodromyWord& w);
// beta from the letter-pair rule: -1 for LR, +1 for RL, 0 otherwise.
IntVec beta_by_rule(const MonodromyWord& w);

}  // namespace qhyp
