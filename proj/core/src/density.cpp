#include "dadc/density.hpp"

#include <algorithm>
#include <numeric>

#include "dadc/errors.hpp"

namespace dadc {

void knn_stats(const NeighborIndex& index, std::vector<double>& kdist,
               std::vector<double>& kden, std::size_t& clamp_events) {
    const std::size_t n = index.size();
    const std::size_t k = index.k;
    kdist.assign(n, 0.0);
    kden.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* d = index.row_dists(i);
        double sum = 0.0;
        for (std::size_t r = 0; r < k; ++r)
            sum += d[r];
        double mean = sum / static_cast<double>(k);
        if (mean < kDensityEps) {
            mean = kDensityEps;
            ++clamp_events;
        }
        kdist[i] = mean;
        kden[i] = 1.0 / mean;
    }
}

std::vector<double> domain_density(const NeighborIndex& index, const std::vector<double>& kden,
                                   std::size_t& clamp_events) {
    const std::size_t n = index.size();
    const std::size_t k = index.k;
    std::vector<double> dom(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t* ids = index.row_ids(i);
        const double* dists = index.row_dists(i);
        double acc = kden[i];
        for (std::size_t r = 0; r < k; ++r) {
            double d = dists[r];
            if (d < kDensityEps) {
                d = kDensityEps;
                ++clamp_events;
            }
            acc += kden[ids[r]] / d;
        }
        dom[i] = acc;
    }
    return dom;
}

void delta_distances(const std::vector<double>& density, const DistanceSource& src,
                     std::vector<double>& delta, std::vector<std::uint32_t>& witness,
                     std::vector<std::uint32_t>& order) {
    const std::size_t n = density.size();
    if (n < 2)
        throw parameter_error("delta distances need at least 2 points");

    order.resize(n);
    std::iota(order.begin(), order.end(), 0u);
    // (density desc, id asc): equal density with smaller id counts as higher.
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (density[a] != density[b])
            return density[a] > density[b];
        return a < b;
    });

    delta.assign(n, 0.0);
    witness.assign(n, kNoWitness);

    const std::uint32_t top = order[0];
    double far = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        far = std::max(far, src(top, j));
    delta[top] = far;

    for (std::size_t r = 1; r < n; ++r) {
        const std::uint32_t i = order[r];
        // Nearest point earlier in the order; distance ties keep the earliest.
        double best = src(i, order[0]);
        std::uint32_t who = order[0];
        for (std::size_t q = 1; q < r; ++q) {
            double d = src(i, order[q]);
            if (d < best) {
                best = d;
                who = order[q];
            }
        }
        delta[i] = best;
        witness[i] = who;
    }
}

DensityProfile compute_profile(const DistanceSource& src, const NeighborIndex& index) {
    DensityProfile p;
    knn_stats(index, p.kdist, p.kden, p.clamp_events);
    p.domain_density = domain_density(index, p.kden, p.clamp_events);
    delta_distances(p.domain_density, src, p.delta, p.delta_witness, p.density_order);
    const std::size_t n = p.domain_density.size();
    p.adaptive_density.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        p.adaptive_density[i] = p.domain_density[i] * p.delta[i];
    return p;
}

} // namespace dadc
