#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dadc/distance.hpp"

namespace dadc {

// Density-peaks baseline: hard-cutoff local density plus delta distance.
struct BaselineProfile {
    std::vector<int> rho;      // points strictly within cutoff, self excluded
    std::vector<double> delta; // over (rho desc, id asc) order
    std::vector<std::uint32_t> witness;
    double cutoff = 0.0;
};

struct BaselineClustering {
    std::vector<int> labels;            // -1 only when no center exists at all
    std::vector<std::uint32_t> centers; // rho > rho_max/2 and delta > delta_max/4
};

// Cutoff making the mean within-cutoff neighbor count ~ frac * n, found by
// rank on the sorted pair distances.  Needs n >= 2 (parameter_error).
double auto_cutoff(const DistanceSource& src, double frac = 0.02);

// cutoff <= 0 raises parameter_error.
BaselineProfile baseline_profile(const DistanceSource& src, double cutoff);

// Centers by the quarter-threshold rule; every other point follows its
// nearest-denser witness chain (the baseline has no outlier wedge).
BaselineClustering baseline_cluster(const DistanceSource& src, const BaselineProfile& profile);

} // namespace dadc
