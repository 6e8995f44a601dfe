#include "dadc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dadc/baseline.hpp"
#include "dadc/errors.hpp"

namespace dadc {
namespace {

std::size_t distinct_clusters(const std::vector<int>& labels) {
    std::set<int> ids;
    for (int lab : labels)
        if (lab >= 0)
            ids.insert(lab);
    return ids.size();
}

// One cluster holding everything, seeded at the density-order maximum.
void single_cluster(PipelineResult& r, std::uint32_t seed_point, std::size_t n) {
    r.roles.assign(n, PointRole::Remaining);
    r.initial.labels.assign(n, 0);
    r.initial.centers = {seed_point};
    r.initial.fallback_assignments = 0;
    r.ensemble.labels.assign(n, 0);
    r.ensemble.merges = 0;
}

} // namespace

std::size_t PipelineResult::outlier_count() const {
    std::size_t c = 0;
    for (PointRole role : roles)
        if (role == PointRole::Outlier)
            ++c;
    return c;
}

std::size_t PipelineResult::initial_cluster_count() const {
    return distinct_clusters(initial.labels);
}

std::size_t PipelineResult::final_cluster_count() const {
    return distinct_clusters(ensemble.labels);
}

PipelineResult run_dadc(const DistanceSource& src, std::size_t k, double threshold) {
    if (k < 1)
        throw parameter_error("k must be at least 1");
    if (threshold <= 0.0)
        throw parameter_error("fusion threshold must be positive");

    PipelineResult r;
    const std::size_t n = src.size();
    if (n == 1) {
        // No neighbors exist; the profile degenerates to a clamped self-row.
        r.profile.kdist = {kDensityEps};
        r.profile.kden = {1.0 / kDensityEps};
        r.profile.domain_density = {1.0 / kDensityEps};
        r.profile.delta = {0.0};
        r.profile.adaptive_density = {0.0};
        r.profile.delta_witness = {kNoWitness};
        r.profile.density_order = {0};
        r.profile.clamp_events = 1;
        r.cp = critical_point(r.profile);
        single_cluster(r, 0, 1);
        return r;
    }

    const NeighborIndex index = build_neighbor_index(src, k);
    r.profile = compute_profile(src, index);
    r.cp = critical_point(r.profile);

    const double delta_max =
        *std::max_element(r.profile.delta.begin(), r.profile.delta.end());
    if (delta_max == 0.0) {
        // All points coincident: one cluster, no outliers.
        single_cluster(r, r.profile.density_order[0], n);
        return r;
    }

    r.roles = partition_points(r.profile, r.cp);
    r.initial = assign_remaining(r.profile, r.roles, src);
    r.ensemble = self_ensemble(r.profile, index, r.initial, threshold);
    return r;
}

std::vector<SweepRow> robustness_sweep(const Dataset& base,
                                       const std::vector<double>& levels,
                                       std::size_t k, double threshold,
                                       const std::vector<std::uint64_t>& seeds,
                                       double baseline_cutoff) {
    if (!base.has_labels())
        throw validation_error("robustness sweep requires ground-truth labels");
    if (levels.empty())
        throw parameter_error("robustness sweep needs at least one noise level");
    if (seeds.empty())
        throw parameter_error("robustness sweep needs at least one seed");

    std::vector<std::size_t> subset(base.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        subset[i] = i;

    std::vector<SweepRow> rows;
    for (double level : levels) {
        std::vector<double> ca_dadc, ca_base;
        for (std::uint64_t seed : seeds) {
            Dataset noisy = base;
            Rng rng(seed);
            inject_noise(noisy, level, rng);
            const DistanceSource src = DistanceSource::from_dataset(noisy);

            const PipelineResult r = run_dadc(src, k, threshold);
            ca_dadc.push_back(
                clustering_accuracy(r.ensemble.labels, noisy.labels, subset).accuracy);

            const double cutoff =
                baseline_cutoff > 0.0 ? baseline_cutoff : auto_cutoff(src);
            const BaselineProfile bp = baseline_profile(src, cutoff);
            const BaselineClustering bc = baseline_cluster(src, bp);
            ca_base.push_back(
                clustering_accuracy(bc.labels, noisy.labels, subset).accuracy);
        }
        auto aggregate = [&](const char* name, const std::vector<double>& values) {
            SweepRow row;
            row.level = level;
            row.algorithm = name;
            row.seeds = values.size();
            double mean = 0.0;
            for (double v : values)
                mean += v;
            mean /= static_cast<double>(values.size());
            double var = 0.0;
            for (double v : values)
                var += (v - mean) * (v - mean);
            row.mean_ca = mean;
            row.std_ca = std::sqrt(var / static_cast<double>(values.size()));
            rows.push_back(row);
        };
        aggregate("cfsfdp", ca_base);
        aggregate("dadc", ca_dadc);
    }
    return rows;
}

} // namespace dadc
