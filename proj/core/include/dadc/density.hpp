#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dadc/distance.hpp"
#include "dadc/neighbors.hpp"

namespace dadc {

// Zero distances are clamped to this inside density formulas (never inside
// the neighbor index) so reciprocals stay finite on coincident points.
inline constexpr double kDensityEps = 1e-12;

inline constexpr std::uint32_t kNoWitness = 0xffffffffu;

// Per-point density statistics.  delta is computed from a frozen snapshot
// of domain_density, so results are independent of evaluation order;
// adaptive_density is the post-multiplication product domain * delta.
struct DensityProfile {
    std::vector<double> kdist;          // mean distance to the k neighbors
    std::vector<double> kden;           // 1 / kdist
    std::vector<double> domain_density; // kden + sum of kden_j / d_ij over neighbors
    std::vector<double> delta;          // distance to the nearest denser point
    std::vector<double> adaptive_density;
    std::vector<std::uint32_t> delta_witness; // the point realizing delta
    std::vector<std::uint32_t> density_order; // ids by (domain desc, id asc)
    std::size_t clamp_events = 0;             // degeneracy report: eps clamps applied

    std::size_t size() const { return kdist.size(); }
};

// (kdist, kden) from the index rows; zero means are clamped and counted.
void knn_stats(const NeighborIndex& index, std::vector<double>& kdist,
               std::vector<double>& kden, std::size_t& clamp_events);

// Weighted neighborhood density: kden_i + sum_j kden_j / d_ij.
std::vector<double> domain_density(const NeighborIndex& index, const std::vector<double>& kden,
                                   std::size_t& clamp_events);

// Delta distances over an arbitrary density vector: points are ordered by
// (density desc, id asc); the order-maximal point takes its farthest pair
// distance, every other point the distance to its nearest earlier-in-order
// point (distance ties keep the earliest).  n == 1 raises parameter_error.
void delta_distances(const std::vector<double>& density, const DistanceSource& src,
                     std::vector<double>& delta, std::vector<std::uint32_t>& witness,
                     std::vector<std::uint32_t>& order);

// Full two-phase profile for one dataset.
DensityProfile compute_profile(const DistanceSource& src, const NeighborIndex& index);

} // namespace dadc
