#include "dadc/dataset.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "dadc/csv.hpp"
#include "dadc/errors.hpp"

namespace dadc {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

bool parse_real(const std::string& field, double& value) {
    const char* b = field.data();
    const char* e = b + field.size();
    auto res = std::from_chars(b, e, value);
    return res.ec == std::errc() && res.ptr == e && !field.empty();
}

bool parse_int(const std::string& field, int& value) {
    const char* b = field.data();
    const char* e = b + field.size();
    auto res = std::from_chars(b, e, value);
    return res.ec == std::errc() && res.ptr == e && !field.empty();
}

std::string lower(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

[[noreturn]] void bad_row(std::size_t line_no, const std::string& what) {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Dataset load_dataset(std::istream& in) {
    Dataset ds;
    std::string line;
    std::size_t line_no = 0;
    std::size_t ncols = 0;
    bool has_label = false;
    bool saw_header = false;
    bool saw_data = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        auto fields = split_fields(line);

        if (!saw_data && !saw_header) {
            // A first row with any non-numeric field is the header.
            bool numeric = true;
            for (const auto& f : fields) {
                double v;
                if (!parse_real(f, v)) {
                    numeric = false;
                    break;
                }
            }
            if (!numeric) {
                saw_header = true;
                ncols = fields.size();
                has_label = lower(fields.back()) == "label";
                if (ncols - (has_label ? 1 : 0) == 0)
                    throw format_error("header declares no coordinate columns");
                continue;
            }
        }
        if (ncols == 0)
            ncols = fields.size();
        else if (fields.size() != ncols)
            throw format_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(ncols) + " columns, found " +
                               std::to_string(fields.size()));

        std::size_t dim = ncols - (has_label ? 1 : 0);
        for (std::size_t c = 0; c < dim; ++c) {
            double v;
            if (!parse_real(fields[c], v))
                bad_row(line_no, "cannot parse coordinate '" + fields[c] + "'");
            ds.coords.push_back(v);
        }
        if (has_label) {
            int lab;
            if (!parse_int(fields.back(), lab))
                bad_row(line_no, "cannot parse label '" + fields.back() + "'");
            ds.labels.push_back(lab);
        }
        ds.dim = dim;
        saw_data = true;
    }
    if (!saw_data)
        throw empty_dataset_error("input contains no data rows");
    return ds;
}

Dataset load_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open input file: " + path);
    return load_dataset(in);
}

void save_dataset(std::ostream& out, const Dataset& ds) {
    if (ds.dim <= 3) {
        static const char* names[] = {"x", "y", "z"};
        for (std::size_t c = 0; c < ds.dim; ++c)
            out << (c ? "," : "") << names[c];
    } else {
        for (std::size_t c = 0; c < ds.dim; ++c)
            out << (c ? "," : "") << "x" << c;
    }
    if (ds.has_labels())
        out << ",label";
    out << '\n';
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double* p = ds.point(i);
        for (std::size_t c = 0; c < ds.dim; ++c)
            out << (c ? "," : "") << format_double(p[c]);
        if (ds.has_labels())
            out << ',' << ds.labels[i];
        out << '\n';
    }
}

void save_dataset_file(const std::string& path, const Dataset& ds) {
    write_file(path, [&](std::ostream& out) { save_dataset(out, ds); });
}

std::vector<double> load_distance_matrix(std::istream& in, std::size_t& n) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    std::size_t ncols = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        auto fields = split_fields(line);
        if (ncols == 0)
            ncols = fields.size();
        else if (fields.size() != ncols)
            throw format_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(ncols) + " columns, found " +
                               std::to_string(fields.size()));
        for (const auto& f : fields) {
            double v;
            if (!parse_real(f, v))
                bad_row(line_no, "cannot parse distance '" + f + "'");
            values.push_back(v);
        }
        ++rows;
    }
    if (rows == 0)
        throw empty_dataset_error("matrix input contains no rows");
    if (rows != ncols)
        throw format_error("distance matrix must be square, got " + std::to_string(rows) +
                           " rows x " + std::to_string(ncols) + " columns");
    n = rows;
    return values;
}

std::vector<double> load_distance_matrix_file(const std::string& path, std::size_t& n) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open matrix file: " + path);
    return load_distance_matrix(in, n);
}

} // namespace dadc
