#pragma once

#include <cstddef>
#include <vector>

#include "dadc/dataset.hpp"

namespace dadc {

// Euclidean distance between two dim-dimensional points.
double euclidean(const double* a, const double* b, std::size_t dim);

// Uniform pair-distance access over either point coordinates (metric mode,
// computed on demand) or an externally supplied distance matrix.  A matrix
// must be symmetric with zero diagonal and non-negative finite entries;
// violations raise validation_error.
class DistanceSource {
public:
    static DistanceSource from_dataset(const Dataset& ds);
    static DistanceSource from_matrix(std::vector<double> matrix, std::size_t n);

    std::size_t size() const { return n_; }
    bool metric_mode() const { return metric_; }
    std::size_t dim() const { return dim_; }
    const double* point(std::size_t i) const { return data_.data() + i * dim_; }

    double operator()(std::size_t i, std::size_t j) const {
        if (metric_)
            return euclidean(data_.data() + i * dim_, data_.data() + j * dim_, dim_);
        return data_[i * n_ + j];
    }

private:
    DistanceSource() = default;

    std::vector<double> data_; // coords (n*dim) or matrix (n*n)
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    bool metric_ = true;
};

} // namespace dadc
