#include "dadc/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dadc/density.hpp"
#include "dadc/errors.hpp"

namespace dadc {

double auto_cutoff(const DistanceSource& src, double frac) {
    const std::size_t n = src.size();
    if (n < 2)
        throw parameter_error("automatic cutoff needs at least 2 points");
    std::vector<double> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.push_back(src(i, j));
    std::sort(pairs.begin(), pairs.end());
    // Rank such that the mean strict-within count is ~ frac * n.
    const double target = frac * static_cast<double>(n) * static_cast<double>(n) / 2.0;
    auto idx = static_cast<std::int64_t>(std::ceil(target)) - 1;
    idx = std::max<std::int64_t>(idx, 0);
    idx = std::min<std::int64_t>(idx, static_cast<std::int64_t>(pairs.size()) - 1);
    return pairs[static_cast<std::size_t>(idx)];
}

BaselineProfile baseline_profile(const DistanceSource& src, double cutoff) {
    if (cutoff <= 0.0)
        throw parameter_error("baseline cutoff must be positive");
    const std::size_t n = src.size();
    BaselineProfile p;
    p.cutoff = cutoff;
    p.rho.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && src(i, j) < cutoff)
                ++count;
        p.rho[i] = count;
    }
    if (n >= 2) {
        std::vector<double> density(p.rho.begin(), p.rho.end());
        std::vector<std::uint32_t> order;
        delta_distances(density, src, p.delta, p.witness, order);
    } else {
        p.delta.assign(n, 0.0);
        p.witness.assign(n, kNoWitness);
    }
    return p;
}

BaselineClustering baseline_cluster(const DistanceSource& src, const BaselineProfile& profile) {
    (void)src;
    const std::size_t n = profile.rho.size();
    BaselineClustering out;
    out.labels.assign(n, -1);
    if (n == 0)
        return out;

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (profile.rho[a] != profile.rho[b])
            return profile.rho[a] > profile.rho[b];
        return a < b;
    });

    int rho_max = *std::max_element(profile.rho.begin(), profile.rho.end());
    double delta_max = *std::max_element(profile.delta.begin(), profile.delta.end());
    for (std::uint32_t i = 0; i < n; ++i)
        if (static_cast<double>(profile.rho[i]) > rho_max / 2.0 &&
            profile.delta[i] > delta_max / 4.0)
            out.centers.push_back(i);
    for (std::size_t c = 0; c < out.centers.size(); ++c)
        out.labels[out.centers[c]] = static_cast<int>(c);

    // Everyone else follows its nearest-denser witness; with no centers at
    // all the chains bottom out at the unlabeled density maximum and the
    // whole dataset stays noise.
    const std::uint32_t top = order[0];
    for (std::uint32_t i : order) {
        if (out.labels[i] >= 0)
            continue;
        const std::uint32_t w = profile.witness[i];
        out.labels[i] = out.labels[w == kNoWitness ? top : w];
    }
    return out;
}

} // namespace dadc
