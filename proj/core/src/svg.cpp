#include "dadc/svg.hpp"

#include <algorithm>
#include <ostream>

#include "dadc/csv.hpp"

namespace dadc {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 54.0;

struct Axis {
    double lo, hi; // data range mapped onto the plot area

    double map(double v, double out_lo, double out_hi) const {
        if (hi <= lo)
            return 0.5 * (out_lo + out_hi);
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

double px(const Axis& ax, double v) { return ax.map(v, kMargin, kWidth - kMargin); }
double py(const Axis& ay, double v) { return ay.map(v, kHeight - kMargin, kMargin); }

void open_svg(std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
}

const char* palette(int label) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                   "#bcbd22", "#17becf"};
    return colors[label % 10];
}

} // namespace

void export_decision_graph_svg(std::ostream& out, const DensityProfile& profile,
                               const std::vector<PointRole>& roles,
                               const CriticalPoint& cp) {
    double xmax = 0.0, ymax = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        xmax = std::max(xmax, profile.domain_density[i]);
        ymax = std::max(ymax, profile.delta[i]);
    }
    const Axis ax{0.0, xmax * 1.05};
    const Axis ay{0.0, ymax * 1.05};

    open_svg(out);
    out << "<style>.center{fill:#d62728}.outlier{fill:#9467bd}"
           ".remaining{fill:#1f77b4}"
           ".guide{stroke:#888888;stroke-width:1;stroke-dasharray:4 3}"
           ".critical{fill:#000000}"
           ".frame{fill:none;stroke:#333333;stroke-width:1}"
           "text{font-family:monospace;font-size:12px;fill:#333333}</style>\n";
    out << "<rect class=\"frame\" x=\"" << format_double(kMargin) << "\" y=\""
        << format_double(kMargin) << "\" width=\"" << format_double(kWidth - 2 * kMargin)
        << "\" height=\"" << format_double(kHeight - 2 * kMargin) << "\"/>\n";
    out << "<text x=\"" << format_double(kWidth / 2) << "\" y=\""
        << format_double(kHeight - 16.0)
        << "\" text-anchor=\"middle\">domain density</text>\n";
    out << "<text x=\"16\" y=\"" << format_double(kHeight / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << format_double(kHeight / 2) << ")\">delta distance</text>\n";

    // Threshold guides through the critical point, one per axis.
    out << "<line class=\"guide\" x1=\"" << format_double(px(ax, cp.x)) << "\" y1=\""
        << format_double(py(ay, ay.lo)) << "\" x2=\"" << format_double(px(ax, cp.x))
        << "\" y2=\"" << format_double(py(ay, ay.hi)) << "\"/>\n";
    out << "<line class=\"guide\" x1=\"" << format_double(px(ax, ax.lo)) << "\" y1=\""
        << format_double(py(ay, cp.y)) << "\" x2=\"" << format_double(px(ax, ax.hi))
        << "\" y2=\"" << format_double(py(ay, cp.y)) << "\"/>\n";
    out << "<rect class=\"critical\" x=\"" << format_double(px(ax, cp.x) - 3.0)
        << "\" y=\"" << format_double(py(ay, cp.y) - 3.0) << "\" width=\"6\" height=\"6\"/>\n";

    for (std::size_t i = 0; i < profile.size(); ++i)
        out << "<circle class=\"" << role_name(roles[i]) << "\" cx=\""
            << format_double(px(ax, profile.domain_density[i])) << "\" cy=\""
            << format_double(py(ay, profile.delta[i])) << "\" r=\"3\"/>\n";
    out << "</svg>\n";
}

void export_cluster_plot(std::ostream& out, const Dataset& data,
                         const std::vector<int>& labels) {
    double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
    const std::size_t n = data.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double x = data.point(i)[0];
        const double y = data.dim > 1 ? data.point(i)[1] : 0.0;
        if (i == 0) {
            xlo = xhi = x;
            ylo = yhi = y;
        } else {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    const double xpad = (xhi - xlo) * 0.03, ypad = (yhi - ylo) * 0.03;
    const Axis ax{xlo - xpad, xhi + xpad};
    const Axis ay{ylo - ypad, yhi + ypad};

    open_svg(out);
    out << "<style>.noise{fill:none;stroke:#555555;stroke-width:1}"
           ".frame{fill:none;stroke:#333333;stroke-width:1}</style>\n";
    out << "<rect class=\"frame\" x=\"" << format_double(kMargin) << "\" y=\""
        << format_double(kMargin) << "\" width=\"" << format_double(kWidth - 2 * kMargin)
        << "\" height=\"" << format_double(kHeight - 2 * kMargin) << "\"/>\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double x = data.point(i)[0];
        const double y = data.dim > 1 ? data.point(i)[1] : 0.0;
        out << "<circle ";
        if (labels[i] < 0)
            out << "class=\"noise\" ";
        else
            out << "fill=\"" << palette(labels[i]) << "\" ";
        out << "cx=\"" << format_double(px(ax, x)) << "\" cy=\""
            << format_double(py(ay, y)) << "\" r=\"2.5\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace dadc
