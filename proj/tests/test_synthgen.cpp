#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "dadc/distance.hpp"
#include "dadc/errors.hpp"
#include "dadc/synthgen.hpp"

using namespace dadc;

namespace {

std::vector<std::size_t> label_counts(const Dataset& ds, std::size_t classes) {
    std::vector<std::size_t> counts(classes, 0);
    for (int lab : ds.labels)
        ++counts[static_cast<std::size_t>(lab)];
    return counts;
}

} // namespace

TEST_SUITE("synthgen") {

TEST_CASE("heart preset produces three labeled 71-point regions") {
    VddMeta meta;
    Dataset ds = generate_vdd(heart_regions(), 42, &meta);
    CHECK(ds.size() == 213);
    CHECK(ds.dim == 2);
    CHECK(label_counts(ds, 3) == std::vector<std::size_t>{71, 71, 71});
    CHECK(meta.warnings.empty());
    REQUIRE(meta.knot_ids.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        REQUIRE(meta.knot_ids[r].size() == 6);
        // Knots are the last six ids of their 71-point region block.
        for (std::size_t q = 0; q < 6; ++q)
            CHECK(meta.knot_ids[r][q] == r * 71 + 65 + q);
    }
}

TEST_CASE("explicit region counts split a 788-point suite") {
    auto regions = heart_regions();
    regions[0].count = 262;
    regions[1].count = 263;
    regions[2].count = 263;
    Dataset ds = generate_vdd(regions, 3);
    CHECK(ds.size() == 788);
    CHECK(label_counts(ds, 3) == std::vector<std::size_t>{262, 263, 263});
}

TEST_CASE("generation is deterministic per seed") {
    Dataset a = generate_vdd(heart_regions(), 5);
    Dataset b = generate_vdd(heart_regions(), 5);
    Dataset c = generate_vdd(heart_regions(), 6);
    CHECK(a.coords == b.coords);
    CHECK(a.labels == b.labels);
    CHECK(a.coords != c.coords);

    Dataset m1 = generate_mddm(gaussian_regions(), 9);
    Dataset m2 = generate_mddm(gaussian_regions(), 9);
    CHECK(m1.coords == m2.coords);

    Dataset l1 = generate_lattice_preset(4);
    Dataset l2 = generate_lattice_preset(4);
    CHECK(l1.coords == l2.coords);
}

TEST_CASE("heart regions stay inside their annulus bound") {
    auto regions = heart_regions();
    Dataset ds = generate_vdd(regions, 8);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& rg = regions[static_cast<std::size_t>(ds.labels[i])];
        const double dx = ds.point(i)[0] - rg.cx;
        const double dy = ds.point(i)[1] - rg.cy;
        const double r = std::sqrt(dx * dx + dy * dy);
        CHECK(r <= rg.extent * 1.02); // small jitter allowance at the rim
    }
}

TEST_CASE("a single varying-density region warns") {
    VddMeta meta;
    std::vector<RegionSpec> one = {heart_regions()[0]};
    Dataset ds = generate_vdd(one, 1, &meta);
    CHECK(ds.size() == 71);
    CHECK(meta.warnings.size() == 1);
}

TEST_CASE("region validation rejects degenerate specs") {
    RegionSpec r;
    r.shape = RegionShape::RingHeart;
    r.count = 0;
    CHECK_THROWS_AS(validate_region(r), validation_error);
    r.count = 71;
    r.extent = 0.0;
    CHECK_THROWS_AS(validate_region(r), validation_error);
    r.extent = 1.0;
    r.density_tier = -1.0;
    CHECK_THROWS_AS(validate_region(r), validation_error);

    auto overlapping = heart_regions();
    overlapping[1].cx = overlapping[0].cx;
    overlapping[1].cy = overlapping[0].cy;
    CHECK_THROWS_AS(generate_vdd(overlapping, 1), validation_error);

    std::vector<RegionSpec> tiny = {heart_regions()[0]};
    tiny[0].count = 6; // no room for bulk around the knot
    CHECK_THROWS_AS(generate_vdd(tiny, 1), validation_error);

    CHECK_THROWS_AS(generate_vdd({}, 1), validation_error);
}

TEST_CASE("lattice preset is two exact integer grids") {
    Dataset ds = generate_lattice_preset(11);
    CHECK(ds.size() == 288);
    CHECK(label_counts(ds, 2) == std::vector<std::size_t>{144, 144});
    std::set<std::pair<double, double>> seen;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double x = ds.point(i)[0], y = ds.point(i)[1];
        CHECK(x == std::floor(x));
        CHECK(y == std::floor(y));
        CHECK(seen.emplace(x, y).second);
    }
}

TEST_CASE("lattice regions keep a clear horizontal gap") {
    Dataset ds = generate_lattice_preset(13);
    double max_a = -1e300, min_b = 1e300;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds.labels[i] == 0)
            max_a = std::max(max_a, ds.point(i)[0]);
        else
            min_b = std::min(min_b, ds.point(i)[0]);
    }
    // The seed picks 3 or 4 empty cells; edge-to-edge that is gap+1 pitches.
    const double gap = min_b - max_a;
    CHECK(gap >= 4.0);
    CHECK(gap <= 5.0);
}

TEST_CASE("equalized-density generation validates its lattice contract") {
    CHECK_THROWS_AS(generate_lattice_preset(1, 0), parameter_error);
    CHECK_THROWS_AS(generate_lattice_preset(1, 12, 0.0), parameter_error);

    RegionSpec a;
    a.shape = RegionShape::Rectangle;
    a.extent = 4.0; // 4 cells per side at spacing 1
    a.count = 15;   // not 16
    a.cx = 1.5;
    a.cy = 1.5;
    CHECK_THROWS_AS(generate_ed({a}, 1.0, 1), validation_error);

    a.count = 16;
    RegionSpec b = a;
    b.cx = 3.5; // overlaps a
    CHECK_THROWS_AS(generate_ed({a, b}, 1.0, 1), validation_error);
}

TEST_CASE("gaussian preset places 1024 points per region 16 sigma apart") {
    auto regions = gaussian_regions();
    Dataset ds = generate_mddm(regions, 2);
    CHECK(ds.size() == 2048);
    CHECK(label_counts(ds, 2) == std::vector<std::size_t>{1024, 1024});

    // Truncation: nothing beyond 1.5 sigma from its own center.
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& rg = regions[static_cast<std::size_t>(ds.labels[i])];
        const double dx = ds.point(i)[0] - rg.cx;
        const double dy = ds.point(i)[1] - rg.cy;
        CHECK(std::sqrt(dx * dx + dy * dy) <= 1.5 * rg.extent * (1 + 1e-12));
    }
    const double sep = std::abs(regions[1].cx - regions[0].cx);
    CHECK(sep == 16.0 * 500.0);
}

TEST_CASE("random gaussian points respect the minimum pairwise spacing") {
    // The floor binds the 1018 randomly placed points of each region; the 6
    // knot points appended after them sit closer together by construction.
    Dataset ds = generate_mddm(gaussian_regions(), 3);
    auto src = DistanceSource::from_dataset(ds);
    double min_d = 1e300;
    for (std::size_t region = 0; region < 2; ++region) {
        const std::size_t base = region * 1024;
        for (std::size_t i = base; i < base + 1018; ++i)
            for (std::size_t j = i + 1; j < base + 1018; ++j)
                min_d = std::min(min_d, src(i, j));
    }
    CHECK(min_d >= 0.008 * 500.0 * (1 - 1e-12));
}

TEST_CASE("uniform cluster is a tightly jittered grid") {
    Dataset ds = generate_uniform_cluster(21, 200, 0.005);
    CHECK(ds.size() == 200);
    CHECK(ds.dim == 2);
    CHECK_FALSE(ds.has_labels());
    // 200 points on a 15-wide grid of pitch 0.005: span stays tiny.
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        lo = std::min(lo, ds.point(i)[0]);
        hi = std::max(hi, ds.point(i)[0]);
    }
    CHECK(hi - lo <= 0.005 * 15);
    CHECK(hi - lo >= 0.005 * 10);
}

TEST_CASE("spec strings select generators with key=value parameters") {
    Dataset heart = generate_from_spec("heart", 1);
    CHECK(heart.size() == 213);
    Dataset small = generate_from_spec("heart count=10", 1);
    CHECK(small.size() == 30);
    Dataset lattice = generate_from_spec("lattice side=10", 1);
    CHECK(lattice.size() == 200);
    Dataset gauss = generate_from_spec("gaussians n=64,sigma=2", 1);
    CHECK(gauss.size() == 128);
    Dataset uni = generate_from_spec("uniform n=50 s=0.01", 1);
    CHECK(uni.size() == 50);
    // The last occurrence of a repeated key wins.
    CHECK(generate_from_spec("heart count=10 count=20", 1).size() == 60);
}

TEST_CASE("spec strings reject unknown names, keys, and bad values") {
    CHECK_THROWS_AS(generate_from_spec("", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("rings", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("heart side=3", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("heart count", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("heart count=abc", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("heart count=6", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("lattice spacing=-1", 1), parameter_error);
    CHECK_THROWS_AS(generate_from_spec("uniform s=0", 1), parameter_error);
}

TEST_CASE("planted knots solve to their density targets") {
    // The solver inverts the vertex profile: mean neighbor distance 1/kden
    // and a pinned domain density at vertex 0 of the 6-point clique.  The
    // domain target must exceed the equal-distance floor kden * (1 + 5*kden),
    // which the gap term can always reach from above.
    const double kden_target = 1.1;
    const double dom_target = 12.0;
    double radius = 0.0, gap = 0.0;
    solve_knot(kden_target, dom_target, radius, gap);
    auto knot = knot_coordinates(radius, gap);
    REQUIRE(knot.size() == 12);

    double d[5];
    for (int v = 1; v < 6; ++v) {
        const double dx = knot[2 * v] - knot[0];
        const double dy = knot[2 * v + 1] - knot[1];
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
    CHECK(mean == doctest::Approx(1.0 / kden_target).epsilon(1e-9));
    CHECK(dom == doctest::Approx(dom_target).epsilon(1e-6));

    // The tangent-split pairs realize the solved gap exactly.
    const double pdx = knot[0] - knot[2], pdy = knot[1] - knot[3];
    CHECK(std::sqrt(pdx * pdx + pdy * pdy) == doctest::Approx(gap).epsilon(1e-12));
}

} // TEST_SUITE
