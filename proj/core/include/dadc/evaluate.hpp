#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dadc/dataset.hpp"
#include "dadc/rng.hpp"

namespace dadc {

// Per-cluster majority bookkeeping behind the accuracy score.
struct ClusterScore {
    int cluster = 0;        // predicted cluster id (kNoise for the noise group)
    std::size_t size = 0;   // evaluated points carrying this id
    int majority_label = 0; // most frequent truth label (kNoise for noise group)
    std::size_t majority_count = 0;
};

struct EvaluationReport {
    std::vector<ClusterScore> clusters; // sorted by cluster id, noise group last
    std::size_t evaluated = 0;          // denominator
    double accuracy = 0.0;              // sum of majority counts / evaluated
};

// Majority-credit accuracy over points with truth labels.  Predicted noise
// earns zero credit but stays in the denominator.  `subset` restricts the
// evaluated points (used to score only the original points after noise
// injection); empty means all. Truth/predicted size mismatch or an empty
// evaluation set raises validation_error.
EvaluationReport clustering_accuracy(const std::vector<int>& predicted,
                                     const std::vector<int>& truth,
                                     const std::vector<std::size_t>& subset = {});

// Appends ceil(fraction * size()) uniform points over the data's bounding
// box, labelled kNoise, de-duplicated against existing and added points.
// fraction must lie in [0, 0.15]; a zero-extent bounding box on a non-empty
// dataset raises validation_error.  Returns the indices of the added points.
std::vector<std::size_t> inject_noise(Dataset& data, double fraction, Rng& rng);

// One aggregate row of a noise-robustness sweep.
struct SweepRow {
    double level = 0.0;
    std::string algorithm; // "dadc" or "cfsfdp"
    double mean_ca = 0.0;
    double std_ca = 0.0; // population standard deviation over seeds
    std::size_t seeds = 0;
};

} // namespace dadc
