#pragma once

#include <iosfwd>
#include <vector>

#include "dadc/centers.hpp"
#include "dadc/dataset.hpp"
#include "dadc/density.hpp"

namespace dadc {

// Scatter of (domain density, delta) — the plane the thresholds live in —
// with exactly one <circle> marker per point (class = role word), two
// <line class="guide"> threshold guides, and one <rect class="critical">
// marking the critical point.
void export_decision_graph_svg(std::ostream& out, const DensityProfile& profile,
                               const std::vector<PointRole>& roles,
                               const CriticalPoint& cp);

// 2-D scatter colored by cluster label (noise rendered hollow); exactly one
// <circle> per point.  Datasets with dim != 2 plot the first two coordinates.
void export_cluster_plot(std::ostream& out, const Dataset& data,
                         const std::vector<int>& labels);

} // namespace dadc
