#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dadc/centers.hpp"
#include "dadc/density.hpp"
#include "dadc/neighbors.hpp"

namespace dadc {

// One evaluated cluster pair in one merge round.  Only pairs with at least
// one crossing point are evaluated; `merged` marks the round's winner.
struct FusionCandidate {
    std::size_t round = 0;
    int a = 0;
    int b = 0;
    std::size_t crossing_points = 0;
    double ids = 0.0;       // inter-cluster density similarity, in (0, 1]
    double ccd = 0.0;       // crossover-degree sum over both directions
    double cds_ratio = 0.0; // union-to-part stability ratio, >= 1
    double cfd = 0.0;       // triangle-area fusion degree
    bool merged = false;
};

struct EnsembleResult {
    std::vector<int> labels; // contiguous ids, kNoise preserved
    std::vector<FusionCandidate> trace;
    std::size_t merges = 0;
};

// 2*sqrt(u*v)/(u+v) over the mean member densities; 1 iff equal.
double density_similarity(double mean_a, double mean_b);

// 2*sqrt(na*nb)/(na+nb) for a crossing point's neighbor counts (nb >= 1).
double crossover_degree(std::size_t own, std::size_t other);

// Half-log of the density deviation sum, floored at kDensityEps.
double density_stability(const std::vector<double>& kden,
                         const std::vector<std::uint32_t>& members);

// (d_union/d_a) * (d_union/d_b) after the common shift to >= 1.
double stability_ratio(double d_a, double d_b, double d_union);

// Triangle area spanned by the three pairwise products.
double fusion_degree(double ids, double ccd, double cds_ratio);

// Greedy highest-degree-first merging of cluster pairs whose fusion degree
// strictly exceeds the threshold; ties prefer the smaller id pair.  Each
// round re-evaluates all pairs sharing >= 1 crossing point and appends them
// to the trace.  threshold <= 0 raises parameter_error.
EnsembleResult self_ensemble(const DensityProfile& profile, const NeighborIndex& index,
                             const InitialClustering& initial, double threshold);

} // namespace dadc
