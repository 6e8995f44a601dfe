#include "dadc/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dadc/centers.hpp"
#include "dadc/errors.hpp"

namespace dadc {

EvaluationReport clustering_accuracy(const std::vector<int>& predicted,
                                     const std::vector<int>& truth,
                                     const std::vector<std::size_t>& subset) {
    if (predicted.size() != truth.size())
        throw validation_error("prediction and truth sizes differ");
    std::vector<std::size_t> eval = subset;
    if (eval.empty())
        for (std::size_t i = 0; i < predicted.size(); ++i)
            eval.push_back(i);
    if (eval.empty())
        throw validation_error("nothing to evaluate");
    for (std::size_t i : eval)
        if (i >= predicted.size())
            throw validation_error("evaluation subset index out of range");

    // cluster id -> truth label -> count; noise clusters keyed like the rest.
    std::map<int, std::map<int, std::size_t>> groups;
    for (std::size_t i : eval)
        ++groups[predicted[i]][truth[i]];

    EvaluationReport report;
    report.evaluated = eval.size();
    std::size_t credit = 0;
    for (const auto& [cluster, hist] : groups) {
        ClusterScore score;
        score.cluster = cluster;
        for (const auto& [lab, cnt] : hist)
            score.size += cnt;
        if (cluster == kNoise) {
            // Predicted noise earns nothing but still weighs the denominator.
            score.majority_label = kNoise;
            score.majority_count = 0;
        } else {
            score.majority_count = 0;
            for (const auto& [lab, cnt] : hist)
                if (cnt > score.majority_count) { // ties keep the smaller label
                    score.majority_count = cnt;
                    score.majority_label = lab;
                }
            credit += score.majority_count;
        }
        report.clusters.push_back(score);
    }
    // Ascending cluster id with the noise group moved to the back.
    std::stable_sort(report.clusters.begin(), report.clusters.end(),
                     [](const ClusterScore& a, const ClusterScore& b) {
                         const bool na = a.cluster == kNoise, nb = b.cluster == kNoise;
                         if (na != nb)
                             return nb;
                         return a.cluster < b.cluster;
                     });
    report.accuracy = static_cast<double>(credit) / static_cast<double>(report.evaluated);
    return report;
}

std::vector<std::size_t> inject_noise(Dataset& data, double fraction, Rng& rng) {
    if (!(fraction >= 0.0 && fraction <= 0.15))
        throw validation_error("noise fraction must lie in [0, 0.15]");
    const std::size_t n = data.size();
    const auto m = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
    if (m == 0)
        return {};

    std::vector<double> lo(data.dim), hi(data.dim);
    for (std::size_t d = 0; d < data.dim; ++d)
        lo[d] = hi[d] = data.point(0)[d];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t d = 0; d < data.dim; ++d) {
            lo[d] = std::min(lo[d], data.point(i)[d]);
            hi[d] = std::max(hi[d], data.point(i)[d]);
        }
    for (std::size_t d = 0; d < data.dim; ++d)
        if (!(hi[d] > lo[d]))
            throw validation_error("noise bounds are degenerate (zero extent)");

    std::set<std::vector<double>> seen;
    for (std::size_t i = 0; i < n; ++i)
        seen.emplace(data.point(i), data.point(i) + data.dim);

    std::vector<std::size_t> added;
    std::vector<double> q(data.dim);
    while (added.size() < m) {
        for (std::size_t d = 0; d < data.dim; ++d)
            q[d] = rng.uniform(lo[d], hi[d]);
        if (!seen.insert(q).second)
            continue;
        data.coords.insert(data.coords.end(), q.begin(), q.end());
        if (data.has_labels())
            data.labels.push_back(kNoise);
        added.push_back(n + added.size());
    }
    return added;
}

} // namespace dadc
