#include "evicast/mass.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "evicast/errors.hpp"

namespace evicast {

namespace {

std::uint64_t full_bits(const Frame& frame) {
    return frame.size() == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << frame.size()) - 1;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

MassFunction::MassFunction(FramePtr frame, std::map<std::uint64_t, double> focal)
    : frame_(std::move(frame)), focal_(std::move(focal)) {}

MassFunction MassFunction::vacuous(FramePtr frame) {
    if (!frame) throw ValidationError("mass function needs a frame");
    std::map<std::uint64_t, double> focal;
    focal[full_bits(*frame)] = 1.0;
    return MassFunction(std::move(frame), std::move(focal));
}

double MassFunction::mass(const HypothesisSet& set) const {
    if (set.universe_size() != frame_->size())
        throw FrameMismatchError("mass lookup with a set over a different frame");
    const auto it = focal_.find(set.bits());
    return it == focal_.end() ? 0.0 : it->second;
}

double MassFunction::frame_mass() const {
    const auto it = focal_.find(full_bits(*frame_));
    return it == focal_.end() ? 0.0 : it->second;
}

HypothesisSet MassFunction::set_for(std::uint64_t bits) const {
    return HypothesisSet::from_bits(bits, frame_->size());
}

bool MassFunction::same_frame(const MassFunction& other) const {
    return frame_ == other.frame_ || *frame_ == *other.frame_;
}

MassFunction validate_mass(const FramePtr& frame, std::span<const RawAssignment> assignments) {
    if (!frame) throw ValidationError("mass function needs a frame");

    std::map<std::uint64_t, double> focal;
    double total = 0.0;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        const auto& a = assignments[i];
        const std::string where = "assignment #" + std::to_string(i + 1);
        if (a.hypothesis.universe_size() != frame->size())
            throw FrameMismatchError(where + " is a set over a different frame");
        if (a.hypothesis.is_empty())
            throw ValidationError(where + " places belief on the empty hypothesis");
        if (!std::isfinite(a.belief) || a.belief < 0.0)
            throw ValidationError(where + ": belief " + fmt(a.belief) +
                                  " must be a finite non-negative number");
        focal[a.hypothesis.bits()] += a.belief; // duplicates merge by addition
        total += a.belief;
    }

    if (total > 1.0 + kMassTolerance)
        throw ValidationError("beliefs sum to " + fmt(total) + ", exceeding 1 by " +
                              fmt(total - 1.0));

    // Unallotted belief is reserved judgement and goes to the full frame.
    const double deficit = 1.0 - total;
    if (deficit > kMassTolerance) focal[full_bits(*frame)] += deficit;

    double sum = 0.0;
    for (const auto& [bits, mass] : focal) sum += mass;

    std::map<std::uint64_t, double> kept;
    for (const auto& [bits, mass] : focal)
        if (mass > 0.0) kept[bits] = mass / sum;

    return MassFunction(frame, std::move(kept));
}

MassFunction discount(const MassFunction& m, double rate) {
    if (!std::isfinite(rate) || rate < 0.0 || rate > 1.0)
        throw ValidationError("discount rate " + fmt(rate) + " lies outside [0,1]");

    const double keep = 1.0 - rate;
    const std::uint64_t full = full_bits(*m.frame());

    std::map<std::uint64_t, double> focal;
    for (const auto& [bits, mass] : m.focal()) {
        const double v = keep * mass;
        if (v > 0.0) focal[bits] = v;
    }
    if (rate > 0.0) focal[full] += rate;

    return MassFunction(m.frame(), std::move(focal));
}

MassFunction evidence_to_mass(const FramePtr& frame, const Evidence& e) {
    if (!std::isfinite(e.impact) || e.impact < 0.0 || e.impact > 1.0)
        throw ValidationError("evidence '" + e.label + "': impact " + fmt(e.impact) +
                              " lies outside [0,1]");
    return discount(validate_mass(frame, e.assignments), 1.0 - e.impact);
}

} // namespace evicast
