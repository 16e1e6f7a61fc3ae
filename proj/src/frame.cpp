#include "evicast/frame.hpp"

#include <bit>
#include <charconv>

#include "evicast/errors.hpp"

namespace evicast {

std::string to_string(const Score& s) {
    return std::to_string(s.home) + ":" + std::to_string(s.away);
}

namespace {

// Parses "h:a" with plain decimal goal counts. The cap differentiates the
// strict frame parser from the lenient result parser.
Score parse_score_text(std::string_view text, int max_goals, const char* cap_note) {
    const auto fail = [&](const std::string& why) -> Score {
        throw ParseError("score '" + std::string(text) + "': " + why);
    };

    const auto colon = text.find(':');
    if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
        fail("expected the form 'home:away'");

    const auto parse_goals = [&](std::string_view part, const char* side) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            fail(std::string(side) + " goals '" + std::string(part) + "' are not a number");
        if (value < 0)
            fail(std::string(side) + " goals '" + std::string(part) + "' are negative");
        if (value > max_goals)
            fail(std::string(side) + " goal count " + std::to_string(value) + " " + cap_note);
        return value;
    };

    Score s;
    s.home = parse_goals(text.substr(0, colon), "home");
    s.away = parse_goals(text.substr(colon + 1), "away");
    return s;
}

} // namespace

Score parse_score(std::string_view text) {
    return parse_score_text(text, kMaxGoalsPerSide,
                            "exceeds the 0..5 frame of considered scores");
}

Score parse_result_score(std::string_view text) {
    return parse_score_text(text, 99, "is not a plausible goal count");
}

std::size_t HypothesisSet::count() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

bool HypothesisSet::is_full() const {
    return universe_ > 0 && count() == universe_;
}

bool HypothesisSet::contains(std::size_t index) const {
    return index < universe_ && (bits_ >> index) & 1u;
}

bool HypothesisSet::subset_of(const HypothesisSet& other) const {
    if (universe_ != other.universe_)
        throw FrameMismatchError("subset test across frames of different cardinality");
    return (bits_ & ~other.bits_) == 0;
}

HypothesisSet HypothesisSet::complement() const {
    const std::uint64_t mask =
        universe_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_) - 1;
    return HypothesisSet(~bits_ & mask, universe_);
}

std::vector<std::size_t> HypothesisSet::member_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < universe_; ++i)
        if ((bits_ >> i) & 1u) out.push_back(i);
    return out;
}

HypothesisSet HypothesisSet::from_bits(std::uint64_t bits, std::size_t universe) {
    if (universe == 0 || universe > Frame::kMaxElements)
        throw ValidationError("hypothesis set universe must have 1..64 elements");
    const std::uint64_t mask =
        universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    if (bits & ~mask)
        throw ValidationError("hypothesis set has members outside its frame");
    return HypothesisSet(bits, static_cast<std::uint32_t>(universe));
}

HypothesisSet intersect(const HypothesisSet& a, const HypothesisSet& b) {
    if (a.universe_size() != b.universe_size())
        throw FrameMismatchError("intersection across frames of different cardinality");
    return HypothesisSet::from_bits(a.bits() & b.bits(), a.universe_size());
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw ValidationError("a frame of discernment needs at least one element");
    if (labels_.size() > kMaxElements)
        throw ValidationError("frame exceeds the supported " +
                              std::to_string(kMaxElements) + " elements");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw ValidationError("frame element #" + std::to_string(i) + " has an empty label");
        if (!index_.emplace(labels_[i], i).second)
            throw ValidationError("duplicate frame element '" + labels_[i] + "'");
    }
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

HypothesisSet Frame::none() const {
    return HypothesisSet::from_bits(0, size());
}

HypothesisSet Frame::all() const {
    return none().complement();
}

HypothesisSet Frame::singleton(std::size_t index) const {
    if (index >= size())
        throw ValidationError("frame element index " + std::to_string(index) + " out of range");
    return HypothesisSet::from_bits(std::uint64_t{1} << index, size());
}

HypothesisSet Frame::subset(std::span<const std::size_t> indices) const {
    std::uint64_t bits = 0;
    for (const auto index : indices) {
        if (index >= size())
            throw ValidationError("frame element index " + std::to_string(index) +
                                  " out of range");
        bits |= std::uint64_t{1} << index;
    }
    return HypothesisSet::from_bits(bits, size());
}

HypothesisSet Frame::subset_of_labels(std::span<const std::string> labels) const {
    std::uint64_t bits = 0;
    for (const auto& label : labels) {
        const auto index = index_of(label);
        if (!index)
            throw ParseError("'" + label + "' is not an element of the frame");
        bits |= std::uint64_t{1} << *index;
    }
    return HypothesisSet::from_bits(bits, size());
}

FramePtr make_standard_frame() {
    static const FramePtr frame = [] {
        std::vector<std::string> labels;
        labels.reserve((kMaxGoalsPerSide + 1) * (kMaxGoalsPerSide + 1));
        for (int home = 0; home <= kMaxGoalsPerSide; ++home)
            for (int away = 0; away <= kMaxGoalsPerSide; ++away)
                labels.push_back(to_string(Score{home, away}));
        return std::make_shared<const Frame>(std::move(labels));
    }();
    return frame;
}

Score standard_score_at(std::size_t index) {
    const int side = kMaxGoalsPerSide + 1;
    if (index >= static_cast<std::size_t>(side * side))
        throw ValidationError("standard frame index " + std::to_string(index) + " out of range");
    return Score{static_cast<int>(index) / side, static_cast<int>(index) % side};
}

std::size_t standard_index_of(const Score& s) {
    if (s.home < 0 || s.home > kMaxGoalsPerSide || s.away < 0 || s.away > kMaxGoalsPerSide)
        throw ValidationError("score " + to_string(s) + " lies outside the standard frame");
    return static_cast<std::size_t>(s.home * (kMaxGoalsPerSide + 1) + s.away);
}

} // namespace evicast
