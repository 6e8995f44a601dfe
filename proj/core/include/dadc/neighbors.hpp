#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dadc/distance.hpp"

namespace dadc {

// K nearest other points per point, sorted by ascending (distance, id).
// Ties on distance are broken by ascending id, which makes every quantity
// derived downstream deterministic.
struct NeighborIndex {
    std::size_t k = 0;
    std::vector<std::uint32_t> ids; // n * k
    std::vector<double> dists;      // n * k

    std::size_t size() const { return k == 0 ? 0 : ids.size() / k; }
    const std::uint32_t* row_ids(std::size_t i) const { return ids.data() + i * k; }
    const double* row_dists(std::size_t i) const { return dists.data() + i * k; }
};

// Normative O(n^2) scan; the oracle for any accelerated index.
NeighborIndex brute_force_index(const DistanceSource& src, std::size_t k);

// Uniform-grid accelerated exact search (metric mode, 2..4 dims).  Produces
// bit-identical results to the brute-force scan: both select by the same
// (distance, id) order and compute distances with the same function.
NeighborIndex grid_index(const DistanceSource& src, std::size_t k);

// Picks an implementation automatically.  k outside [1, n-1] raises
// parameter_error.
NeighborIndex build_neighbor_index(const DistanceSource& src, std::size_t k);

} // namespace dadc
