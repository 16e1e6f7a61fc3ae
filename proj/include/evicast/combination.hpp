#pragma once

#include <span>

#include "evicast/mass.hpp"

namespace evicast {

/// Below this value of 1 - K the combination counts as total conflict.
inline constexpr double kTotalConflictThreshold = 1e-12;

/// Focal elements dropping below this mass after normalisation are pruned
/// to keep the sparse map bounded.
inline constexpr double kFocalDropThreshold = 1e-12;

/// The conflict K between two mass functions: the total product mass that
/// falls on empty intersections, and the resulting normalisation factor.
struct ConflictReport {
    double mass_of_conflict = 0.0;
    double normalisation_factor = 1.0;
};

ConflictReport conflict(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule for two mass functions. Commutative (bit-for-bit: the
/// operands are folded in a canonical order) and associative up to rounding.
/// Throws TotalConflictError when 1 - K vanishes.
MassFunction orthogonal_sum(const MassFunction& m1, const MassFunction& m2);

/// Left fold of the orthogonal sum over a non-empty list. The result is
/// independent of input order up to 1e-9 per focal mass. A total conflict
/// error names the offending fold step.
MassFunction combine_all(std::span<const MassFunction> masses);

/// Bel(A): total mass of focal elements contained in A.
double belief(const MassFunction& m, const HypothesisSet& a);

/// Pl(A): total mass of focal elements intersecting A. Equals 1 - Bel(A^c).
double plausibility(const MassFunction& m, const HypothesisSet& a);

} // namespace evicast
