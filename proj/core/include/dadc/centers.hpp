#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dadc/density.hpp"
#include "dadc/distance.hpp"

namespace dadc {

inline constexpr int kNoise = -1;

// Fixed decision-graph thresholds: half the maximal domain density and a
// quarter of the maximal delta distance.
struct CriticalPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class PointRole : std::uint8_t { Center, Outlier, Remaining };

struct InitialClustering {
    std::vector<int> labels;            // kNoise for outliers
    std::vector<std::uint32_t> centers; // ascending ids; cluster c = centers[c]
    std::size_t fallback_assignments = 0;
};

CriticalPoint critical_point(const DensityProfile& profile);

// Center iff domain > cp.x and delta > cp.y; Outlier iff domain < cp.x and
// delta > cp.y * domain / cp.x (the line through the origin and the critical
// point); boundary cases stay Remaining.  Zero centers raise no_center_error.
std::vector<PointRole> partition_points(const DensityProfile& profile, const CriticalPoint& cp);

// Remaining points, visited in (adaptive desc, id asc) order, join the
// cluster of their nearest already-labeled non-outlier; with no eligible
// target they fall back to the globally densest point's cluster (counted).
// Outliers keep kNoise and are never assignment targets.
InitialClustering assign_remaining(const DensityProfile& profile,
                                   const std::vector<PointRole>& roles,
                                   const DistanceSource& src);

} // namespace dadc
