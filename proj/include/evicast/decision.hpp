#pragma once

#include <cstddef>
#include <vector>

#include "evicast/mass.hpp"

namespace evicast {

/// Belief spread over the single elements of a frame. Weights are
/// non-negative and sum to one.
class SingletonDistribution {
public:
    static SingletonDistribution from_weights(FramePtr frame, std::vector<double> weights);

    const FramePtr& frame() const { return frame_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight(std::size_t index) const { return weights_.at(index); }

private:
    SingletonDistribution(FramePtr frame, std::vector<double> weights);

    FramePtr frame_;
    std::vector<double> weights_;

    friend SingletonDistribution distribute_over_singletons(const MassFunction&);
};

/// Spreads every focal mass equally over its member elements, the full
/// frame included. The result is a decision-ready distribution over atomic
/// outcomes that conserves the total mass.
SingletonDistribution distribute_over_singletons(const MassFunction& m);

/// A total, deterministic ordering of atomic outcomes by weight.
struct RankedPrediction {
    struct Entry {
        std::size_t index = 0; // element position in the frame
        double weight = 0.0;
    };

    FramePtr frame;
    std::vector<Entry> ranking; // weight descending, ties by frame order; zero weights omitted
    std::size_t top = 0;        // element index of ranking.front()
};

/// Sorts by weight descending; ties break by frame element order (for the
/// standard frame that is home ascending, then away ascending).
RankedPrediction rank(const SingletonDistribution& d);

} // namespace evicast
