#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dadc/centers.hpp"
#include "dadc/density.hpp"
#include "dadc/distance.hpp"
#include "dadc/ensemble.hpp"
#include "dadc/evaluate.hpp"
#include "dadc/neighbors.hpp"

namespace dadc {

struct PipelineResult {
    DensityProfile profile;
    CriticalPoint cp;
    std::vector<PointRole> roles;
    InitialClustering initial;
    EnsembleResult ensemble;

    std::size_t center_count() const { return initial.centers.size(); }
    std::size_t outlier_count() const;
    std::size_t initial_cluster_count() const; // distinct non-noise initial labels
    std::size_t final_cluster_count() const;   // distinct non-noise final labels
};

// Full run: neighbor index -> density profile -> partition -> assignment ->
// self-ensemble.  Degenerate inputs short-circuit to one cluster: a single
// point, or a profile whose maximal delta is zero (all points coincident).
// k < 1 raises parameter_error; threshold <= 0 raises parameter_error.
PipelineResult run_dadc(const DistanceSource& src, std::size_t k = 5,
                        double threshold = 1.0);

// Noise-robustness protocol: per level x seed, inject noise into a labeled
// copy, cluster with both algorithms, score CA over the original points
// only, then aggregate mean/std per (level, algorithm).  baseline_cutoff
// <= 0 selects the automatic per-dataset cutoff.
std::vector<SweepRow> robustness_sweep(const Dataset& base,
                                       const std::vector<double>& levels,
                                       std::size_t k, double threshold,
                                       const std::vector<std::uint64_t>& seeds,
                                       double baseline_cutoff = 0.0);

} // namespace dadc
