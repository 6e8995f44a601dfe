#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dadc/centers.hpp"
#include "dadc/density.hpp"
#include "dadc/ensemble.hpp"
#include "dadc/evaluate.hpp"

namespace dadc {

// Shortest round-trip decimal form (std::to_chars); "nan"/"inf" never occur
// in exported values.
std::string format_double(double v);

// Lowercase role words used by the decision-graph exports.
const char* role_name(PointRole role);

// "id,cluster" rows, noise as -1.
void export_labels(std::ostream& out, const std::vector<int>& labels);

// "id,adaptive_density,delta,role" rows in id order.
void export_decision_graph_csv(std::ostream& out, const DensityProfile& profile,
                               const std::vector<PointRole>& roles);

// "round,a,b,ids,ccd,cds_ratio,cfd,merged" rows; merged is 0/1.
void export_trace(std::ostream& out, const std::vector<FusionCandidate>& trace);

// "level,algorithm,mean_ca,std_ca,seeds" rows sorted by (level, algorithm).
void export_sweep(std::ostream& out, std::vector<SweepRow> rows);

// "cluster,size,majority_label,majority_count,ca"; ca only on the first row.
void export_evaluation(std::ostream& out, const EvaluationReport& report);

// Open `path` for writing and run `writer(stream)`; failure to open or a
// stream error afterwards raises io_error naming the path.
void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& writer);

} // namespace dadc
