#include "evicast/combination.hpp"

#include <algorithm>
#include <sstream>

#include "evicast/errors.hpp"

namespace evicast {

namespace {

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
    if (!m1.same_frame(m2))
        throw FrameMismatchError("mass functions live over different frames");
}

// Deterministic total order on focal maps, used to canonicalise operand
// order so the product accumulation (and hence its rounding) is identical
// for (m1, m2) and (m2, m1).
bool focal_before(const MassFunction& a, const MassFunction& b) {
    const auto cmp = [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    };
    return std::lexicographical_compare(a.focal().begin(), a.focal().end(),
                                        b.focal().begin(), b.focal().end(), cmp);
}

} // namespace

ConflictReport conflict(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    double k = 0.0;
    for (const auto& [xb, xm] : m1.focal())
        for (const auto& [yb, ym] : m2.focal())
            if ((xb & yb) == 0) k += xm * ym;
    return ConflictReport{k, 1.0 - k};
}

MassFunction orthogonal_sum(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);

    const MassFunction* a = &m1;
    const MassFunction* b = &m2;
    if (focal_before(*b, *a)) std::swap(a, b);

    double conflict_mass = 0.0;
    std::map<std::uint64_t, double> products;
    for (const auto& [xb, xm] : a->focal()) {
        for (const auto& [yb, ym] : b->focal()) {
            const std::uint64_t c = xb & yb;
            const double p = xm * ym;
            if (c == 0)
                conflict_mass += p;
            else
                products[c] += p;
        }
    }

    const double norm = 1.0 - conflict_mass;
    if (norm <= kTotalConflictThreshold) {
        std::ostringstream os;
        os << "combination is undefined: total conflict (normalisation factor "
           << norm << ")";
        throw TotalConflictError(os.str());
    }

    std::map<std::uint64_t, double> focal;
    double kept = 0.0;
    for (const auto& [bits, p] : products) {
        const double v = p / norm;
        if (v >= kFocalDropThreshold) {
            focal[bits] = v;
            kept += v;
        }
    }
    // Dropping sub-threshold elements loses a sliver of mass; rescale so the
    // sum is exactly one again.
    for (auto& [bits, v] : focal) v /= kept;

    return MassFunction(a->frame(), std::move(focal));
}

MassFunction combine_all(std::span<const MassFunction> masses) {
    if (masses.empty())
        throw ValidationError("combine_all: no mass functions to combine");

    MassFunction acc = masses[0];
    for (std::size_t i = 1; i < masses.size(); ++i) {
        try {
            acc = orthogonal_sum(acc, masses[i]);
        } catch (const TotalConflictError& e) {
            throw TotalConflictError(
                std::string(e.what()) + " at fold step " + std::to_string(i) +
                    " (mass function #" + std::to_string(i + 1) +
                    " against the combination of the first " + std::to_string(i) + ")",
                i);
        }
    }
    return acc;
}

double belief(const MassFunction& m, const HypothesisSet& a) {
    if (a.universe_size() != m.frame()->size())
        throw FrameMismatchError("belief query with a set over a different frame");
    const std::uint64_t ab = a.bits();
    double sum = 0.0;
    for (const auto& [bits, mass] : m.focal())
        if ((bits & ~ab) == 0) sum += mass;
    return sum;
}

double plausibility(const MassFunction& m, const HypothesisSet& a) {
    if (a.universe_size() != m.frame()->size())
        throw FrameMismatchError("plausibility query with a set over a different frame");
    const std::uint64_t ab = a.bits();
    double sum = 0.0;
    for (const auto& [bits, mass] : m.focal())
        if ((bits & ab) != 0) sum += mass;
    return sum;
}

} // namespace evicast
