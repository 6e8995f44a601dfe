#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dadc/dataset.hpp"
#include "dadc/rng.hpp"

namespace dadc {

enum class RegionShape : std::uint8_t { Disk, RingHeart, Rectangle, Gaussian };

struct RegionSpec {
    RegionShape shape = RegionShape::Disk;
    double cx = 0.0;
    double cy = 0.0;
    double extent = 1.0;      // outer radius / square side / gaussian sigma
    std::size_t count = 1;    // points in the region (ring-heart: incl. knot)
    double density_tier = 1.0;
};

// count >= 1, extent > 0, density_tier > 0, all finite.
void validate_region(const RegionSpec& region);

struct VddMeta {
    std::vector<std::vector<std::uint32_t>> knot_ids; // per region; empty for disks
    std::vector<std::string> warnings;
};

// The 6-point clique planted at a ring-heart / gaussian core: three
// tangent-split point pairs on a circle of the given radius, pair gap `gap`.
// Returns 12 interleaved coordinates (x0,y0,x1,y1,...).
std::vector<double> knot_coordinates(double radius, double gap);

// Nested bisection for (radius, gap) such that a knot vertex has mean
// 5-neighbor distance 1/kden_target and domain density dom_target.
void solve_knot(double kden_target, double dom_target, double& radius, double& gap);

// Varying-density regions: each ring-heart region is a jittered lattice fill
// of the annulus [extent/2, extent] plus a 6-point knot whose domain density
// is pinned between the densest bulk and the center threshold; disks are
// knotless full-radius fills.  Regions must not overlap; a single region is
// accepted with a warning in `meta`.
Dataset generate_vdd(const std::vector<RegionSpec>& regions, std::uint64_t seed,
                     VddMeta* meta = nullptr);

// Equalized-density regions: exact square lattices (one per rectangle region,
// side = floor(extent/spacing) cells, count must equal side^2, centers aligned
// to the lattice).  Emission order interleaves region interiors
// farthest-point-first so early ids spread across regions, then the shuffled
// rims; this fragments the initial clustering on purpose.
Dataset generate_ed(const std::vector<RegionSpec>& regions, double spacing,
                    std::uint64_t seed);

// Multi-peak gaussian regions: truncated (1.5 sigma) gaussian samples with a
// flattened core (uniform inside 0.5 sigma), a minimum pairwise spacing, a
// guarded center zone, and a planted 6-point knot pinning each region's
// density peak.  extent = sigma; all shape constants scale with it.
Dataset generate_mddm(const std::vector<RegionSpec>& gaussians, std::uint64_t seed);

// Jittered square lattice of n points, spacing s (single unlabeled blob).
Dataset generate_uniform_cluster(std::uint64_t seed, std::size_t n, double s,
                                 double jitter_frac = 0.01);

// Preset region lists used by the CLI and the evaluation harness.
std::vector<RegionSpec> heart_regions(std::size_t count_per_region = 71,
                                      double s_ref = 1.0);
std::vector<RegionSpec> gaussian_regions(std::size_t n_each = 1024,
                                         double sigma = 500.0,
                                         double sep_factor = 16.0);

// Two side x side squares with a seed-chosen gap of 3-4 cells and a common
// seed-chosen offset; same RNG stream drives layout and emission order.
Dataset generate_lattice_preset(std::uint64_t seed, std::size_t side = 12,
                                double spacing = 1.0);

// Generator spec strings: "heart [count=N] [sref=X]", "lattice [side=N]
// [spacing=X]", "gaussians [n=N] [sigma=X] [sep=X]", "uniform [n=N] [s=X]".
// Tokens split on spaces/commas/colons; unknown names or keys raise
// parameter_error.
Dataset generate_from_spec(const std::string& spec, std::uint64_t seed,
                           VddMeta* meta = nullptr);

} // namespace dadc
