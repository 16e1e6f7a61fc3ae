#include "evicast/decision.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "evicast/errors.hpp"

namespace evicast {

SingletonDistribution::SingletonDistribution(FramePtr frame, std::vector<double> weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {}

SingletonDistribution SingletonDistribution::from_weights(FramePtr frame,
                                                          std::vector<double> weights) {
    if (!frame) throw ValidationError("singleton distribution needs a frame");
    if (weights.size() != frame->size())
        throw ValidationError("weight vector length does not match the frame");
    double sum = 0.0;
    for (const double w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw ValidationError("singleton weights must be finite and non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kMassTolerance)
        throw ValidationError("singleton weights must sum to 1");
    return SingletonDistribution(std::move(frame), std::move(weights));
}

SingletonDistribution distribute_over_singletons(const MassFunction& m) {
    std::vector<double> weights(m.frame()->size(), 0.0);
    for (const auto& [bits, mass] : m.focal()) {
        const auto members = HypothesisSet::from_bits(bits, weights.size()).member_indices();
        const double share = mass / static_cast<double>(members.size());
        for (const auto index : members) weights[index] += share;
    }
    return SingletonDistribution(m.frame(), std::move(weights));
}

RankedPrediction rank(const SingletonDistribution& d) {
    RankedPrediction out;
    out.frame = d.frame();
    out.ranking.reserve(d.weights().size());
    for (std::size_t i = 0; i < d.weights().size(); ++i)
        if (d.weights()[i] > 0.0) out.ranking.push_back({i, d.weights()[i]});

    std::sort(out.ranking.begin(), out.ranking.end(), [](const auto& a, const auto& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.index < b.index; // canonical frame order breaks ties
    });

    if (out.ranking.empty())
        throw ValidationError("cannot rank a distribution with no positive weight");
    out.top = out.ranking.front().index;
    return out;
}

} // namespace evicast
