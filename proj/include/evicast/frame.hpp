#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace evicast {

/// Goal cap per side in the standard closed-world frame. Scores beyond the
/// cap are real in principle but are not considered as hypotheses.
inline constexpr int kMaxGoalsPerSide = 5;

/// One exact final score, the basic hypothesis of the standard frame.
struct Score {
    int home = 0;
    int away = 0;

    friend constexpr auto operator<=>(const Score&, const Score&) = default;
};

/// Canonical text form "home:away", no padding.
std::string to_string(const Score& s);

/// Strict parser for frame members: "h:a" with both goals in 0..5.
/// Throws ParseError naming the offending token.
Score parse_score(std::string_view text);

/// Lenient parser for actual match results, which may fall outside the
/// closed-world frame (goals 0..99). Used when recording real outcomes.
Score parse_result_score(std::string_view text);

class Frame;
using FramePtr = std::shared_ptr<const Frame>;

/// A subset of a frame's elements, stored as a 64-bit membership mask.
/// All set algebra is O(1). Values are immutable once constructed.
class HypothesisSet {
public:
    HypothesisSet() = default;

    std::uint64_t bits() const { return bits_; }
    std::size_t universe_size() const { return universe_; }

    std::size_t count() const;
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const;
    bool contains(std::size_t index) const;
    bool subset_of(const HypothesisSet& other) const;
    HypothesisSet complement() const;

    /// Member element indices in ascending frame order.
    std::vector<std::size_t> member_indices() const;

    static HypothesisSet from_bits(std::uint64_t bits, std::size_t universe);

    friend bool operator==(const HypothesisSet&, const HypothesisSet&) = default;

private:
    HypothesisSet(std::uint64_t bits, std::uint32_t universe)
        : bits_(bits), universe_(universe) {}

    std::uint64_t bits_ = 0;
    std::uint32_t universe_ = 0;
};

/// Exact set intersection. Throws FrameMismatchError if the operands live
/// over universes of different cardinality.
HypothesisSet intersect(const HypothesisSet& a, const HypothesisSet& b);

/// An exhaustive, mutually exclusive set of basic hypotheses. Frames are
/// immutable; share them through FramePtr. At most 64 elements so subsets
/// fit a machine word.
class Frame {
public:
    static constexpr std::size_t kMaxElements = 64;

    explicit Frame(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t index) const { return labels_.at(index); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    HypothesisSet none() const;
    HypothesisSet all() const;
    HypothesisSet singleton(std::size_t index) const;
    HypothesisSet subset(std::span<const std::size_t> indices) const;
    /// Throws ParseError naming the first label that is not a frame element.
    HypothesisSet subset_of_labels(std::span<const std::string> labels) const;

    bool operator==(const Frame& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// The 36-score frame 0:0 .. 5:5 in canonical order (away varies fastest
/// within home). Cached; repeated calls return the same instance.
FramePtr make_standard_frame();

/// Score at a position of the standard frame layout.
Score standard_score_at(std::size_t index);

/// Position of a score in the standard frame layout. The score must be
/// inside the closed world.
std::size_t standard_index_of(const Score& s);

} // namespace evicast
