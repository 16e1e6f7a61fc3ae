#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "evicast/frame.hpp"

namespace evicast {

/// Tolerance for mass-sum checks throughout the library.
inline constexpr double kMassTolerance = 1e-9;

/// One line of raw expert input: a hypothesis set and the belief placed on it.
struct RawAssignment {
    HypothesisSet hypothesis;
    double belief = 0.0;
};

/// A labelled prediction criterion. The impact i in [0,1] expresses how
/// strongly the criterion bears on the final score; it is applied as the
/// discount rate 1 - i before combination.
struct Evidence {
    std::string label;
    double impact = 1.0;
    std::vector<RawAssignment> assignments;
};

/// A basic probability assignment: positive masses on non-empty subsets of
/// the frame, summing to one. Immutable; construction goes through
/// validate_mass, vacuous, or the combination operations.
class MassFunction {
public:
    /// Total ignorance: all mass on the full frame.
    static MassFunction vacuous(FramePtr frame);

    const FramePtr& frame() const { return frame_; }

    /// Focal elements as bits -> mass, in deterministic ascending-bits order.
    const std::map<std::uint64_t, double>& focal() const { return focal_; }

    std::size_t focal_count() const { return focal_.size(); }

    /// Mass of a set; zero if the set is not focal.
    double mass(const HypothesisSet& set) const;

    /// Mass on the full frame (reserved judgement), zero if absent.
    double frame_mass() const;

    HypothesisSet set_for(std::uint64_t bits) const;

    bool same_frame(const MassFunction& other) const;

private:
    MassFunction(FramePtr frame, std::map<std::uint64_t, double> focal);

    FramePtr frame_;
    std::map<std::uint64_t, double> focal_;

    friend MassFunction validate_mass(const FramePtr&, std::span<const RawAssignment>);
    friend MassFunction discount(const MassFunction&, double);
    friend MassFunction orthogonal_sum(const MassFunction&, const MassFunction&);
};

/// Turns raw assignments into a valid mass function. Duplicate hypothesis
/// sets are merged by addition. Any deficit 1 - sum(beliefs) flows to the
/// full frame as reserved judgement; a total beyond 1 + tolerance is an
/// over-allocation error. The result is renormalised to sum exactly to one.
MassFunction validate_mass(const FramePtr& frame, std::span<const RawAssignment> assignments);

/// Discounting with rate alpha in [0,1]: every proper subset keeps (1-alpha)
/// of its mass, the remainder moves to the full frame. alpha = 0 is the
/// identity, alpha = 1 yields the vacuous mass function.
MassFunction discount(const MassFunction& m, double rate);

/// Validates the raw assignments of a piece of evidence and applies its
/// impact as discount rate 1 - impact.
MassFunction evidence_to_mass(const FramePtr& frame, const Evidence& e);

} // namespace evicast
