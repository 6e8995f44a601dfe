#include "dadc/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "dadc/errors.hpp"

namespace dadc {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

const char* role_name(PointRole role) {
    switch (role) {
    case PointRole::Center:
        return "center";
    case PointRole::Outlier:
        return "outlier";
    default:
        return "remaining";
    }
}

void export_labels(std::ostream& out, const std::vector<int>& labels) {
    out << "id,cluster\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << i << ',' << labels[i] << '\n';
}

void export_decision_graph_csv(std::ostream& out, const DensityProfile& profile,
                               const std::vector<PointRole>& roles) {
    out << "id,adaptive_density,delta,role\n";
    for (std::size_t i = 0; i < profile.size(); ++i)
        out << i << ',' << format_double(profile.adaptive_density[i]) << ','
            << format_double(profile.delta[i]) << ',' << role_name(roles[i]) << '\n';
}

void export_trace(std::ostream& out, const std::vector<FusionCandidate>& trace) {
    out << "round,a,b,ids,ccd,cds_ratio,cfd,merged\n";
    for (const auto& row : trace)
        out << row.round << ',' << row.a << ',' << row.b << ','
            << format_double(row.ids) << ',' << format_double(row.ccd) << ','
            << format_double(row.cds_ratio) << ',' << format_double(row.cfd) << ','
            << (row.merged ? 1 : 0) << '\n';
}

void export_sweep(std::ostream& out, std::vector<SweepRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.level != b.level)
            return a.level < b.level;
        return a.algorithm < b.algorithm;
    });
    out << "level,algorithm,mean_ca,std_ca,seeds\n";
    for (const auto& r : rows)
        out << format_double(r.level) << ',' << r.algorithm << ','
            << format_double(r.mean_ca) << ',' << format_double(r.std_ca) << ','
            << r.seeds << '\n';
}

void export_evaluation(std::ostream& out, const EvaluationReport& report) {
    out << "cluster,size,majority_label,majority_count,ca\n";
    bool first = true;
    for (const auto& c : report.clusters) {
        out << c.cluster << ',' << c.size << ',' << c.majority_label << ','
            << c.majority_count << ',';
        if (first)
            out << format_double(report.accuracy);
        first = false;
        out << '\n';
    }
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write output file: " + path);
    writer(out);
    out.flush();
    if (!out)
        throw io_error("error while writing output file: " + path);
}

} // namespace dadc
