#include "dadc/centers.hpp"

#include <algorithm>
#include <numeric>

#include "dadc/errors.hpp"

namespace dadc {

CriticalPoint critical_point(const DensityProfile& profile) {
    CriticalPoint cp;
    cp.x = *std::max_element(profile.domain_density.begin(), profile.domain_density.end()) / 2.0;
    cp.y = *std::max_element(profile.delta.begin(), profile.delta.end()) / 4.0;
    return cp;
}

std::vector<PointRole> partition_points(const DensityProfile& profile, const CriticalPoint& cp) {
    const std::size_t n = profile.size();
    std::vector<PointRole> roles(n, PointRole::Remaining);
    std::size_t centers = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dom = profile.domain_density[i];
        const double del = profile.delta[i];
        if (dom > cp.x && del > cp.y) {
            roles[i] = PointRole::Center;
            ++centers;
        } else if (dom < cp.x && del > cp.y * dom / cp.x) {
            roles[i] = PointRole::Outlier;
        }
    }
    if (centers == 0)
        throw no_center_error("decision graph yields no cluster centers");
    return roles;
}

InitialClustering assign_remaining(const DensityProfile& profile,
                                   const std::vector<PointRole>& roles,
                                   const DistanceSource& src) {
    const std::size_t n = profile.size();
    InitialClustering out;
    out.labels.assign(n, kNoise);
    for (std::uint32_t i = 0; i < n; ++i)
        if (roles[i] == PointRole::Center)
            out.centers.push_back(i);
    for (std::size_t c = 0; c < out.centers.size(); ++c)
        out.labels[out.centers[c]] = static_cast<int>(c);

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (profile.adaptive_density[a] != profile.adaptive_density[b])
            return profile.adaptive_density[a] > profile.adaptive_density[b];
        return a < b;
    });

    // The adaptive-density maximum is also the domain-density maximum, which
    // always clears both thresholds, so eligible is nonempty from the second
    // visit on and the fallback is a defensive path only.
    const std::uint32_t gmax = order[0];
    std::vector<std::uint32_t> eligible;
    eligible.reserve(n);
    for (std::uint32_t i : order) {
        if (roles[i] == PointRole::Remaining) {
            if (!eligible.empty()) {
                // Nearest earlier non-outlier; ties keep the earliest visited.
                double best = src(i, eligible[0]);
                std::uint32_t who = eligible[0];
                for (std::size_t q = 1; q < eligible.size(); ++q) {
                    double d = src(i, eligible[q]);
                    if (d < best) {
                        best = d;
                        who = eligible[q];
                    }
                }
                out.labels[i] = out.labels[who];
            } else {
                out.labels[i] = out.labels[gmax];
                ++out.fallback_assignments;
            }
        }
        if (roles[i] != PointRole::Outlier)
            eligible.push_back(i);
    }
    return out;
}

} // namespace dadc
