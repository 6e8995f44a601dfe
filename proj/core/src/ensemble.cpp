#include "dadc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dadc/errors.hpp"

namespace dadc {

double density_similarity(double mean_a, double mean_b) {
    if (mean_a == mean_b)
        return 1.0;
    return 2.0 * std::sqrt(mean_a * mean_b) / (mean_a + mean_b);
}

double crossover_degree(std::size_t own, std::size_t other) {
    const double na = static_cast<double>(own);
    const double nb = static_cast<double>(other);
    return 2.0 * std::sqrt(na * nb) / (na + nb);
}

double density_stability(const std::vector<double>& kden,
                         const std::vector<std::uint32_t>& members) {
    double sum = 0.0;
    for (std::uint32_t m : members)
        sum += kden[m];
    const double mean = sum / static_cast<double>(members.size());
    double dev = 0.0;
    for (std::uint32_t m : members) {
        const double d = kden[m] - mean;
        dev += d * d;
    }
    return 0.5 * std::log(std::max(dev, kDensityEps));
}

double stability_ratio(double d_a, double d_b, double d_union) {
    // Common shift keeps every term >= 1 so the ratio stays meaningful for
    // negative logs; the union deviation dominates either part's.
    const double mn = std::min(std::min(d_a, d_b), d_union);
    if (mn < 1.0) {
        const double shift = 1.0 - mn;
        d_a += shift;
        d_b += shift;
        d_union += shift;
    }
    return (d_union / d_a) * (d_union / d_b);
}

double fusion_degree(double ids, double ccd, double cds_ratio) {
    return (std::sqrt(3.0) / 4.0) * (ids * ccd + ccd * cds_ratio + cds_ratio * ids);
}

namespace {

struct PairEval {
    double ids = 0.0;
    double ccd = 0.0;
    double ratio = 0.0;
    double cfd = 0.0;
    std::size_t ncross = 0;
};

PairEval evaluate_pair(const std::vector<double>& kden, const NeighborIndex& index,
                       const std::vector<int>& labels, int a, int b) {
    std::vector<std::uint32_t> ma, mb;
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == a)
            ma.push_back(i);
        else if (labels[i] == b)
            mb.push_back(i);
    }
    double sum_a = 0.0, sum_b = 0.0;
    for (std::uint32_t m : ma)
        sum_a += kden[m];
    for (std::uint32_t m : mb)
        sum_b += kden[m];

    PairEval ev;
    ev.ids = density_similarity(sum_a / static_cast<double>(ma.size()),
                                sum_b / static_cast<double>(mb.size()));

    const std::size_t k = index.k;
    for (int pass = 0; pass < 2; ++pass) {
        const auto& members = pass == 0 ? ma : mb;
        const int own = pass == 0 ? a : b;
        const int other = pass == 0 ? b : a;
        for (std::uint32_t m : members) {
            const std::uint32_t* ids = index.row_ids(m);
            std::size_t n_own = 0, n_other = 0;
            for (std::size_t r = 0; r < k; ++r) {
                const int lab = labels[ids[r]];
                if (lab == own)
                    ++n_own;
                else if (lab == other)
                    ++n_other;
            }
            // A crossing point needs >= 1 neighbor in the other cluster; its
            // own-side count may be 0 and then contributes zero degree.
            if (n_other >= 1) {
                ev.ccd += crossover_degree(n_own, n_other);
                ++ev.ncross;
            }
        }
    }

    const double d_a = density_stability(kden, ma);
    const double d_b = density_stability(kden, mb);
    std::vector<std::uint32_t> mu = ma;
    mu.insert(mu.end(), mb.begin(), mb.end());
    ev.ratio = stability_ratio(d_a, d_b, density_stability(kden, mu));
    ev.cfd = fusion_degree(ev.ids, ev.ccd, ev.ratio);
    return ev;
}

} // namespace

EnsembleResult self_ensemble(const DensityProfile& profile, const NeighborIndex& index,
                             const InitialClustering& initial, double threshold) {
    if (threshold <= 0.0)
        throw parameter_error("fusion threshold must be positive");

    EnsembleResult out;
    out.labels = initial.labels;

    for (std::size_t round = 1;; ++round) {
        std::vector<int> ids;
        for (int lab : out.labels)
            if (lab >= 0 && (ids.empty() || std::find(ids.begin(), ids.end(), lab) == ids.end()))
                ids.push_back(lab);
        std::sort(ids.begin(), ids.end());

        bool have_best = false;
        double best_cfd = 0.0;
        int best_a = 0, best_b = 0;
        std::size_t round_start = out.trace.size();

        for (std::size_t ai = 0; ai < ids.size(); ++ai)
            for (std::size_t bi = ai + 1; bi < ids.size(); ++bi) {
                const int a = ids[ai], b = ids[bi];
                PairEval ev = evaluate_pair(profile.kden, index, out.labels, a, b);
                if (ev.ncross == 0)
                    continue; // not adjacent: not evaluated, no trace row
                FusionCandidate row;
                row.round = round;
                row.a = a;
                row.b = b;
                row.crossing_points = ev.ncross;
                row.ids = ev.ids;
                row.ccd = ev.ccd;
                row.cds_ratio = ev.ratio;
                row.cfd = ev.cfd;
                out.trace.push_back(row);
                if (ev.cfd > threshold) {
                    // Highest degree wins; exact ties prefer the smaller pair.
                    if (!have_best || ev.cfd > best_cfd ||
                        (ev.cfd == best_cfd && (a < best_a || (a == best_a && b < best_b)))) {
                        have_best = true;
                        best_cfd = ev.cfd;
                        best_a = a;
                        best_b = b;
                    }
                }
            }
        if (!have_best)
            break;
        for (std::size_t r = round_start; r < out.trace.size(); ++r)
            if (out.trace[r].a == best_a && out.trace[r].b == best_b)
                out.trace[r].merged = true;
        for (int& lab : out.labels)
            if (lab == best_b)
                lab = best_a;
        ++out.merges;
    }

    // Contiguous relabel: surviving ids in ascending order become 0..m-1.
    std::map<int, int> remap;
    for (int lab : out.labels)
        if (lab >= 0)
            remap.emplace(lab, 0);
    int next = 0;
    for (auto& kv : remap)
        kv.second = next++;
    for (int& lab : out.labels)
        if (lab >= 0)
            lab = remap[lab];
    return out;
}

} // namespace dadc
