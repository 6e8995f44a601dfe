#include "dadc/distance.hpp"

#include <cmath>

#include "dadc/errors.hpp"

namespace dadc {

double euclidean(const double* a, const double* b, std::size_t dim) {
    double acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        double d = a[c] - b[c];
        acc += d * d;
    }
    return std::sqrt(acc);
}

DistanceSource DistanceSource::from_dataset(const Dataset& ds) {
    if (ds.size() == 0)
        throw empty_dataset_error("dataset has no points");
    DistanceSource src;
    src.data_ = ds.coords;
    src.n_ = ds.size();
    src.dim_ = ds.dim;
    src.metric_ = true;
    return src;
}

DistanceSource DistanceSource::from_matrix(std::vector<double> matrix, std::size_t n) {
    if (n == 0)
        throw empty_dataset_error("distance matrix has no rows");
    if (matrix.size() != n * n)
        throw format_error("distance matrix storage does not match its size");
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i * n + i] != 0.0)
            throw validation_error("distance matrix diagonal must be zero (row " +
                                   std::to_string(i) + ")");
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = matrix[i * n + j];
            if (!std::isfinite(v) || v < 0.0)
                throw validation_error("distance matrix entries must be finite and "
                                       "non-negative (row " + std::to_string(i) + ")");
            if (v != matrix[j * n + i])
                throw validation_error("distance matrix must be symmetric (rows " +
                                       std::to_string(i) + "/" + std::to_string(j) + ")");
        }
    }
    DistanceSource src;
    src.data_ = std::move(matrix);
    src.n_ = n;
    src.dim_ = 0;
    src.metric_ = false;
    return src;
}

} // namespace dadc
