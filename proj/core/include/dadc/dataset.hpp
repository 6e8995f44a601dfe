#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace dadc {

// Point cloud with optional per-point ground-truth class labels.
// Coordinates are stored row-major; label -1 marks an unlabeled point
// (e.g. injected noise) inside an otherwise labeled dataset.
struct Dataset {
    std::vector<double> coords; // n * dim
    std::size_t dim = 0;
    std::vector<int> labels; // empty when the dataset carries no truth

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    bool has_labels() const { return !labels.empty(); }
    const double* point(std::size_t i) const { return coords.data() + i * dim; }
};

// CSV rows of decimal reals, one point per row; an optional single header
// line may declare a trailing integer "label" column.
// Errors: unparsable row -> parse_error naming the line number; ragged
// rows -> format_error; no data rows -> empty_dataset_error.
Dataset load_dataset(std::istream& in);
Dataset load_dataset_file(const std::string& path);

// Writes the same CSV dialect (header + shortest round-trip reals).
void save_dataset(std::ostream& out, const Dataset& ds);
void save_dataset_file(const std::string& path, const Dataset& ds);

// n x n distance matrix as CSV; returns the flattened row-major matrix.
// Non-square input -> format_error; empty -> empty_dataset_error.
std::vector<double> load_distance_matrix(std::istream& in, std::size_t& n);
std::vector<double> load_distance_matrix_file(const std::string& path, std::size_t& n);

} // namespace dadc
