#include "dadc/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "dadc/errors.hpp"

namespace dadc {
namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// Dense-lattice domain-density coefficient (dom ~ coef / pitch^2 for an
// interior lattice point, measured) and the knot headroom above it.
constexpr double kBulkDomCoef = 5.6;
constexpr double kApexMargin = 1.2;

// Gaussian-regime shape constants, in units of the region sigma.
constexpr double kMddmTrunc = 1.5;
constexpr double kMddmFlatten = 0.5;
constexpr double kMddmGuard = 0.12;
constexpr double kMddmFloor = 0.008;
constexpr double kMddmKnotKdist = 0.04;
constexpr double kMddmKnotDom = 0.24;

struct KnotStats {
    double kdist;
    double dom;
};

// Vertex 0's profile assuming its 5 neighbors are the other clique vertices.
KnotStats knot_stats(double radius, double gap) {
    const std::vector<double> p = knot_coordinates(radius, gap);
    double d[5];
    for (int v = 1; v < 6; ++v) {
        const double dx = p[2 * v] - p[0];
        const double dy = p[2 * v + 1] - p[1];
        d[v - 1] = std::sqrt(dx * dx + dy * dy);
    }
    double mean = 0.0;
    for (double dv : d)
        mean += dv;
    mean /= 5.0;
    const double kden = 1.0 / mean;
    double dom = kden;
    for (double dv : d)
        dom += kden / dv;
    return {mean, dom};
}

double solve_radius_for_gap(double kden_target, double gap, int iters = 200) {
    const double target = 1.0 / kden_target;
    double lo = gap, hi = 10.0 / kden_target;
    for (int it = 0; it < iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (knot_stats(mid, gap).kdist < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> knot_coordinates(double radius, double gap) {
    std::vector<double> out;
    out.reserve(12);
    const double angles[3] = {0.25 * kTau, 0.25 * kTau + kTau / 3.0,
                              0.25 * kTau + 2.0 * kTau / 3.0};
    for (double ang : angles) {
        const double cx = radius * std::cos(ang);
        const double cy = radius * std::sin(ang);
        const double tx = -std::sin(ang);
        const double ty = std::cos(ang);
        out.push_back(cx + 0.5 * gap * tx);
        out.push_back(cy + 0.5 * gap * ty);
        out.push_back(cx - 0.5 * gap * tx);
        out.push_back(cy - 0.5 * gap * ty);
    }
    return out;
}

void solve_knot(double kden_target, double dom_target, double& radius, double& gap) {
    // Nested bisection: at fixed kdist the domain density falls as the pair
    // gap grows, so the outer search is monotone in gap.
    double lo = 1e-9 / kden_target, hi = 0.999 / kden_target;
    double h = 0.0;
    for (int it = 0; it < 200; ++it) {
        h = 0.5 * (lo + hi);
        const double rho = solve_radius_for_gap(kden_target, h);
        if (knot_stats(rho, h).dom > dom_target)
            lo = h;
        else
            hi = h;
    }
    h = 0.5 * (lo + hi);
    gap = h;
    radius = solve_radius_for_gap(kden_target, h);
}

void validate_region(const RegionSpec& region) {
    if (!(std::isfinite(region.cx) && std::isfinite(region.cy)))
        throw validation_error("region center must be finite");
    if (!(std::isfinite(region.extent) && region.extent > 0.0))
        throw validation_error("region extent must be positive");
    if (!(std::isfinite(region.density_tier) && region.density_tier > 0.0))
        throw validation_error("region density tier must be positive");
    if (region.count < 1)
        throw validation_error("region count must be at least 1");
}

namespace {

// Jittered square-lattice fill of the annulus [r_in, r_out]; site count is
// matched to `count` by down-sampling, shortfalls are filled by rejection.
std::vector<double> lattice_annulus_fill(Rng& rng, double cx, double cy, double r_out,
                                         double r_in, double area_frac, std::size_t count,
                                         double jitter_frac) {
    const double s = std::sqrt(area_frac * M_PI * r_out * r_out / static_cast<double>(count));
    const auto m = static_cast<long>(std::ceil(r_out / s)) + 1;
    std::vector<double> sites;
    for (long i = -m; i <= m; ++i)
        for (long j = -m; j <= m; ++j) {
            const double x = static_cast<double>(i) * s;
            const double y = static_cast<double>(j) * s;
            const double r = std::sqrt(x * x + y * y);
            if (r >= r_in && r <= r_out) {
                sites.push_back(x);
                sites.push_back(y);
            }
        }
    std::size_t nsites = sites.size() / 2;
    if (nsites > count) {
        auto keep = rng.sample_indices(nsites, count);
        std::vector<double> trimmed;
        trimmed.reserve(2 * count);
        for (std::size_t idx : keep) {
            trimmed.push_back(sites[2 * idx]);
            trimmed.push_back(sites[2 * idx + 1]);
        }
        sites = std::move(trimmed);
        nsites = count;
    }
    for (std::size_t i = 0; i < sites.size(); ++i)
        sites[i] += rng.uniform(-jitter_frac * s, jitter_frac * s);
    while (nsites < count) {
        const double x = rng.uniform(-r_out, r_out);
        const double y = rng.uniform(-r_out, r_out);
        const double r = std::sqrt(x * x + y * y);
        if (r >= r_in && r <= r_out) {
            sites.push_back(x);
            sites.push_back(y);
            ++nsites;
        }
    }
    for (std::size_t i = 0; i < sites.size(); i += 2) {
        sites[i] += cx;
        sites[i + 1] += cy;
    }
    return sites;
}

double ring_heart_pitch(const RegionSpec& r) {
    return r.extent /
           (5.25 * std::sqrt(static_cast<double>(r.count - 6) / 65.0));
}

} // namespace

Dataset generate_vdd(const std::vector<RegionSpec>& regions, std::uint64_t seed,
                     VddMeta* meta) {
    if (regions.empty())
        throw validation_error("at least one region is required");
    for (const auto& r : regions) {
        validate_region(r);
        if (r.shape != RegionShape::RingHeart && r.shape != RegionShape::Disk)
            throw validation_error("varying-density regions must be ring-heart or disk");
        if (r.shape == RegionShape::RingHeart && r.count < 7)
            throw validation_error("ring-heart regions need at least 7 points");
    }
    for (std::size_t i = 0; i < regions.size(); ++i)
        for (std::size_t j = i + 1; j < regions.size(); ++j) {
            const double dx = regions[i].cx - regions[j].cx;
            const double dy = regions[i].cy - regions[j].cy;
            if (std::sqrt(dx * dx + dy * dy) < regions[i].extent + regions[j].extent)
                throw validation_error("regions overlap");
        }
    VddMeta local;
    VddMeta& mt = meta ? *meta : local;
    mt.knot_ids.clear();
    mt.warnings.clear();
    if (regions.size() == 1)
        mt.warnings.push_back("single region: output is one class, not a "
                              "varying-density dataset");

    // Knot target ceiling tracks the densest region's bulk.
    double s_min = 0.0;
    double t_min = 0.0, t_max = 0.0;
    bool first = true;
    for (const auto& r : regions) {
        const double s = r.shape == RegionShape::RingHeart
                             ? ring_heart_pitch(r)
                             : r.extent * std::sqrt(M_PI / static_cast<double>(r.count));
        if (first || s < s_min)
            s_min = s;
        if (first || r.density_tier < t_min)
            t_min = r.density_tier;
        if (first || r.density_tier > t_max)
            t_max = r.density_tier;
        first = false;
    }
    const double dom_ceiling = kApexMargin * kBulkDomCoef / (s_min * s_min);

    Dataset ds;
    ds.dim = 2;
    Rng rng(seed);
    for (std::size_t ri = 0; ri < regions.size(); ++ri) {
        const RegionSpec& r = regions[ri];
        std::vector<std::uint32_t> knots;
        const auto base = static_cast<std::uint32_t>(ds.size());
        if (r.shape == RegionShape::RingHeart) {
            auto bulk = lattice_annulus_fill(rng, r.cx, r.cy, r.extent, 0.5 * r.extent,
                                             0.75, r.count - 6, 0.01);
            ds.coords.insert(ds.coords.end(), bulk.begin(), bulk.end());
            const double s = ring_heart_pitch(r);
            const double frac =
                t_max > t_min ? (r.density_tier - t_min) / (t_max - t_min) : 1.0;
            double radius, gap;
            solve_knot(1.1 / s, (0.6 + 0.4 * frac) * dom_ceiling, radius, gap);
            auto knot = knot_coordinates(radius, gap);
            for (std::size_t v = 0; v < 6; ++v) {
                ds.coords.push_back(knot[2 * v] + r.cx);
                ds.coords.push_back(knot[2 * v + 1] + r.cy);
                knots.push_back(base + static_cast<std::uint32_t>(r.count - 6 + v));
            }
        } else {
            auto fill = lattice_annulus_fill(rng, r.cx, r.cy, r.extent, 0.0, 1.0,
                                             r.count, 0.01);
            ds.coords.insert(ds.coords.end(), fill.begin(), fill.end());
        }
        for (std::size_t c = 0; c < r.count; ++c)
            ds.labels.push_back(static_cast<int>(ri));
        mt.knot_ids.push_back(std::move(knots));
    }
    return ds;
}

namespace {

struct EdSite {
    double x, y;
    long i, j; // cell coordinates within the region
    int region;
};

Dataset ed_core(const std::vector<RegionSpec>& regions, double spacing, Rng& rng) {
    std::vector<EdSite> sites;
    std::vector<long> sides;
    for (std::size_t ri = 0; ri < regions.size(); ++ri) {
        const RegionSpec& r = regions[ri];
        const auto side = static_cast<long>(std::floor(r.extent / spacing + 1e-9));
        if (side < 1)
            throw validation_error("region too small for one lattice cell");
        if (static_cast<std::size_t>(side) * static_cast<std::size_t>(side) != r.count)
            throw validation_error("rectangle count must equal its lattice cell count");
        const double half = static_cast<double>(side - 1) / 2.0;
        const double bxf = r.cx / spacing - half;
        const double byf = r.cy / spacing - half;
        const long bx = std::lround(bxf);
        const long by = std::lround(byf);
        if (std::abs(bxf - static_cast<double>(bx)) > 1e-9 ||
            std::abs(byf - static_cast<double>(by)) > 1e-9)
            throw validation_error("region center must align with the lattice");
        sides.push_back(side);
        for (long i = 0; i < side; ++i)
            for (long j = 0; j < side; ++j)
                sites.push_back({static_cast<double>(bx + i) * spacing,
                                 static_cast<double>(by + j) * spacing, i, j,
                                 static_cast<int>(ri)});
    }

    std::vector<std::size_t> interior, rim;
    for (std::size_t t = 0; t < sites.size(); ++t) {
        const long side = sides[sites[t].region];
        if (sites[t].i >= 2 && sites[t].i <= side - 3 && sites[t].j >= 2 &&
            sites[t].j <= side - 3)
            interior.push_back(t);
        else
            rim.push_back(t);
    }

    double xmin = sites[0].x, xmax = sites[0].x, ymin = sites[0].y, ymax = sites[0].y;
    for (const auto& s : sites) {
        xmin = std::min(xmin, s.x);
        xmax = std::max(xmax, s.x);
        ymin = std::min(ymin, s.y);
        ymax = std::max(ymax, s.y);
    }
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);

    std::sort(interior.begin(), interior.end(), [&](std::size_t a, std::size_t b) {
        if (sites[a].x != sites[b].x)
            return sites[a].x < sites[b].x;
        return sites[a].y < sites[b].y;
    });

    // Joint farthest-point traversal of the interiors: start nearest the
    // global box center, then repeatedly take the site farthest from
    // everything chosen.  Early emitted ids therefore alternate between
    // regions, which is what fragments the initial clustering.
    std::vector<std::size_t> order;
    if (!interior.empty()) {
        std::size_t first = 0;
        double best = std::hypot(sites[interior[0]].x - cx, sites[interior[0]].y - cy);
        for (std::size_t n = 1; n < interior.size(); ++n) {
            const double d = std::hypot(sites[interior[n]].x - cx, sites[interior[n]].y - cy);
            if (d < best) {
                best = d;
                first = n;
            }
        }
        order.push_back(interior[first]);
        std::vector<std::size_t> rest;
        std::vector<double> mind;
        for (std::size_t n = 0; n < interior.size(); ++n)
            if (n != first) {
                rest.push_back(interior[n]);
                mind.push_back(std::hypot(sites[interior[n]].x - sites[order[0]].x,
                                          sites[interior[n]].y - sites[order[0]].y));
            }
        while (!rest.empty()) {
            std::size_t pick = 0;
            for (std::size_t n = 1; n < rest.size(); ++n) {
                const auto &sn = sites[rest[n]], &sp = sites[rest[pick]];
                if (mind[n] > mind[pick] ||
                    (mind[n] == mind[pick] &&
                     (sn.x < sp.x || (sn.x == sp.x && sn.y < sp.y))))
                    pick = n;
            }
            const std::size_t chosen = rest[pick];
            order.push_back(chosen);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
            mind.erase(mind.begin() + static_cast<std::ptrdiff_t>(pick));
            for (std::size_t n = 0; n < rest.size(); ++n) {
                const double d = std::hypot(sites[rest[n]].x - sites[chosen].x,
                                            sites[rest[n]].y - sites[chosen].y);
                if (d < mind[n])
                    mind[n] = d;
            }
        }
    }
    rng.shuffle(rim);
    order.insert(order.end(), rim.begin(), rim.end());

    Dataset ds;
    ds.dim = 2;
    for (std::size_t t : order) {
        ds.coords.push_back(sites[t].x);
        ds.coords.push_back(sites[t].y);
        ds.labels.push_back(sites[t].region);
    }
    return ds;
}

} // namespace

Dataset generate_ed(const std::vector<RegionSpec>& regions, double spacing,
                    std::uint64_t seed) {
    if (regions.empty())
        throw validation_error("at least one region is required");
    if (!(std::isfinite(spacing) && spacing > 0.0))
        throw validation_error("lattice spacing must be positive");
    for (const auto& r : regions) {
        validate_region(r);
        if (r.shape != RegionShape::Rectangle)
            throw validation_error("equalized-density regions must be rectangles");
    }
    for (std::size_t i = 0; i < regions.size(); ++i)
        for (std::size_t j = i + 1; j < regions.size(); ++j)
            if (std::abs(regions[i].cx - regions[j].cx) <
                    0.5 * (regions[i].extent + regions[j].extent) &&
                std::abs(regions[i].cy - regions[j].cy) <
                    0.5 * (regions[i].extent + regions[j].extent))
                throw validation_error("regions overlap");
    Rng rng(seed);
    return ed_core(regions, spacing, rng);
}

Dataset generate_lattice_preset(std::uint64_t seed, std::size_t side, double spacing) {
    if (side < 1)
        throw parameter_error("lattice side must be at least 1");
    if (!(std::isfinite(spacing) && spacing > 0.0))
        throw parameter_error("lattice spacing must be positive");
    Rng rng(seed);
    const long gap = 3 + static_cast<long>(rng.bounded(2));
    const long ox = static_cast<long>(rng.bounded(41)) - 20;
    const long oy = static_cast<long>(rng.bounded(41)) - 20;
    const double half = static_cast<double>(side - 1) / 2.0;
    auto region = [&](long bx, long by) {
        RegionSpec r;
        r.shape = RegionShape::Rectangle;
        r.cx = (static_cast<double>(bx) + half) * spacing;
        r.cy = (static_cast<double>(by) + half) * spacing;
        r.extent = static_cast<double>(side) * spacing;
        r.count = side * side;
        return r;
    };
    std::vector<RegionSpec> regions{region(ox, oy),
                                    region(ox + static_cast<long>(side) + gap, oy)};
    return ed_core(regions, spacing, rng);
}

Dataset generate_mddm(const std::vector<RegionSpec>& gaussians, std::uint64_t seed) {
    if (gaussians.empty())
        throw validation_error("at least one gaussian is required");
    for (const auto& r : gaussians) {
        validate_region(r);
        if (r.shape != RegionShape::Gaussian)
            throw validation_error("multi-peak regions must be gaussians");
        if (r.count < 6)
            throw validation_error("gaussian regions need at least 6 points");
    }

    Dataset ds;
    ds.dim = 2;
    Rng rng(seed);
    for (std::size_t ri = 0; ri < gaussians.size(); ++ri) {
        const RegionSpec& r = gaussians[ri];
        const double sigma = r.extent;
        const double floor2 = (kMddmFloor * sigma) * (kMddmFloor * sigma);
        std::vector<double> placed;
        while (placed.size() / 2 < r.count - 6) {
            double x, y, rad;
            while (true) {
                auto [gx, gy] = rng.normal2();
                x = gx * sigma;
                y = gy * sigma;
                rad = std::sqrt(x * x + y * y);
                if (rad >= kMddmGuard * sigma && rad <= kMddmTrunc * sigma)
                    break;
            }
            if (rad < kMddmFlatten * sigma) {
                // Flattened core: uniform over the disk, outside the guard.
                double rr;
                do {
                    rr = kMddmFlatten * sigma * std::sqrt(rng.uniform());
                } while (rr < kMddmGuard * sigma);
                const double th = rng.uniform(0.0, kTau);
                x = rr * std::cos(th);
                y = rr * std::sin(th);
            }
            bool ok = true;
            for (std::size_t p = 0; p < placed.size(); p += 2) {
                const double dx = x - placed[p];
                const double dy = y - placed[p + 1];
                if (dx * dx + dy * dy < floor2) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                placed.push_back(x);
                placed.push_back(y);
            }
        }
        for (std::size_t p = 0; p < placed.size(); p += 2) {
            ds.coords.push_back(placed[p] + r.cx);
            ds.coords.push_back(placed[p + 1] + r.cy);
        }
        double radius, gap;
        solve_knot(1.0 / (kMddmKnotKdist * sigma), kMddmKnotDom * 500.0 / sigma, radius,
                   gap);
        auto knot = knot_coordinates(radius, gap);
        for (std::size_t v = 0; v < 6; ++v) {
            ds.coords.push_back(knot[2 * v] + r.cx);
            ds.coords.push_back(knot[2 * v + 1] + r.cy);
        }
        for (std::size_t c = 0; c < r.count; ++c)
            ds.labels.push_back(static_cast<int>(ri));
    }
    return ds;
}

Dataset generate_uniform_cluster(std::uint64_t seed, std::size_t n, double s,
                                 double jitter_frac) {
    if (n < 1)
        throw parameter_error("cluster size must be at least 1");
    if (!(std::isfinite(s) && s > 0.0))
        throw parameter_error("lattice spacing must be positive");
    const auto side = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(n))));
    Dataset ds;
    ds.dim = 2;
    for (std::size_t i = 0; i < side && ds.coords.size() / 2 < n; ++i)
        for (std::size_t j = 0; j < side && ds.coords.size() / 2 < n; ++j) {
            ds.coords.push_back(static_cast<double>(i) * s);
            ds.coords.push_back(static_cast<double>(j) * s);
        }
    Rng rng(seed);
    for (std::size_t i = 0; i < ds.coords.size(); ++i)
        ds.coords[i] += rng.uniform(-jitter_frac * s, jitter_frac * s);
    return ds;
}

std::vector<RegionSpec> heart_regions(std::size_t count_per_region, double s_ref) {
    const double tiers[3] = {1.0, 4.0, 16.0};
    const double L = 12000.0 * s_ref;
    const double centers[3][2] = {{0.0, 0.0}, {L, 0.0}, {0.5 * L, 0.5 * std::sqrt(3.0) * L}};
    std::vector<RegionSpec> regions;
    for (int i = 0; i < 3; ++i) {
        RegionSpec r;
        r.shape = RegionShape::RingHeart;
        r.cx = centers[i][0];
        r.cy = centers[i][1];
        r.density_tier = tiers[i];
        r.count = count_per_region;
        const double s = s_ref / tiers[i];
        r.extent = 5.25 * s *
                   std::sqrt(static_cast<double>(count_per_region - 6) / 65.0);
        regions.push_back(r);
    }
    return regions;
}

std::vector<RegionSpec> gaussian_regions(std::size_t n_each, double sigma,
                                         double sep_factor) {
    std::vector<RegionSpec> regions(2);
    regions[0].shape = RegionShape::Gaussian;
    regions[0].extent = sigma;
    regions[0].count = n_each;
    regions[1] = regions[0];
    regions[1].cx = sep_factor * sigma;
    return regions;
}

namespace {

std::vector<std::string> tokenize_spec(const std::string& spec) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : spec) {
        if (c == ' ' || c == ',' || c == ';' || c == ':') {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        tokens.push_back(cur);
    return tokens;
}

double spec_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(v))
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw parameter_error("generator spec: bad value for '" + key + "': " + value);
    }
}

std::size_t spec_count(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw parameter_error("generator spec: bad value for '" + key + "': " + value);
    }
}

} // namespace

Dataset generate_from_spec(const std::string& spec, std::uint64_t seed, VddMeta* meta) {
    auto tokens = tokenize_spec(spec);
    if (tokens.empty())
        throw parameter_error("empty generator spec");
    const std::string name = tokens[0];

    std::vector<std::pair<std::string, std::string>> kvs;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto eq = tokens[t].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[t].size())
            throw parameter_error("generator spec: expected key=value, got '" +
                                  tokens[t] + "'");
        kvs.emplace_back(tokens[t].substr(0, eq), tokens[t].substr(eq + 1));
    }
    auto reject_unknown = [&](std::initializer_list<const char*> known) {
        for (const auto& [k, v] : kvs) {
            bool ok = false;
            for (const char* kn : known)
                if (k == kn)
                    ok = true;
            if (!ok)
                throw parameter_error("generator spec: unknown key '" + k +
                                      "' for '" + name + "'");
        }
    };
    auto value_of = [&](const char* key) -> const std::string* {
        const std::string* found = nullptr;
        for (const auto& [k, v] : kvs)
            if (k == key)
                found = &v; // last occurrence wins
        return found;
    };

    if (name == "heart") {
        reject_unknown({"count", "sref"});
        std::size_t count = 71;
        double s_ref = 1.0;
        if (const auto* v = value_of("count"))
            count = spec_count("count", *v);
        if (const auto* v = value_of("sref"))
            s_ref = spec_real("sref", *v);
        if (count < 7)
            throw parameter_error("generator spec: heart count must be >= 7");
        if (s_ref <= 0.0)
            throw parameter_error("generator spec: sref must be positive");
        return generate_vdd(heart_regions(count, s_ref), seed, meta);
    }
    if (name == "lattice") {
        reject_unknown({"side", "spacing"});
        std::size_t side = 12;
        double spacing = 1.0;
        if (const auto* v = value_of("side"))
            side = spec_count("side", *v);
        if (const auto* v = value_of("spacing"))
            spacing = spec_real("spacing", *v);
        if (side < 1)
            throw parameter_error("generator spec: lattice side must be >= 1");
        if (spacing <= 0.0)
            throw parameter_error("generator spec: spacing must be positive");
        return generate_lattice_preset(seed, side, spacing);
    }
    if (name == "gaussians") {
        reject_unknown({"n", "sigma", "sep"});
        std::size_t n = 1024;
        double sigma = 500.0, sep = 16.0;
        if (const auto* v = value_of("n"))
            n = spec_count("n", *v);
        if (const auto* v = value_of("sigma"))
            sigma = spec_real("sigma", *v);
        if (const auto* v = value_of("sep"))
            sep = spec_real("sep", *v);
        if (n < 6)
            throw parameter_error("generator spec: gaussians n must be >= 6");
        if (sigma <= 0.0 || sep <= 0.0)
            throw parameter_error("generator spec: sigma and sep must be positive");
        return generate_mddm(gaussian_regions(n, sigma, sep), seed);
    }
    if (name == "uniform") {
        reject_unknown({"n", "s"});
        std::size_t n = 200;
        double s = 1.0;
        if (const auto* v = value_of("n"))
            n = spec_count("n", *v);
        if (const auto* v = value_of("s"))
            s = spec_real("s", *v);
        if (n < 1)
            throw parameter_error("generator spec: uniform n must be >= 1");
        if (s <= 0.0)
            throw parameter_error("generator spec: s must be positive");
        return generate_uniform_cluster(seed, n, s);
    }
    throw parameter_error("unknown generator '" + name +
                          "' (expected heart, lattice, gaussians, or uniform)");
}

} // namespace dadc
