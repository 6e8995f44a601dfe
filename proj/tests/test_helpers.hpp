#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dadc/dataset.hpp"
#include "dadc/distance.hpp"
#include "dadc/rng.hpp"

namespace helpers {

inline dadc::Dataset points2d(std::initializer_list<std::pair<double, double>> pts) {
    dadc::Dataset ds;
    ds.dim = 2;
    for (const auto& p : pts) {
        ds.coords.push_back(p.first);
        ds.coords.push_back(p.second);
    }
    return ds;
}

inline dadc::Dataset points1d(std::initializer_list<double> xs) {
    dadc::Dataset ds;
    ds.dim = 1;
    for (double x : xs)
        ds.coords.push_back(x);
    return ds;
}

// Uniform box fill, optionally with gaussian blobs mixed in; exercises both
// even and strongly clustered spatial distributions.
inline dadc::Dataset random_cloud(dadc::Rng& rng, std::size_t n, std::size_t dim,
                                  std::size_t blobs = 0) {
    dadc::Dataset ds;
    ds.dim = dim;
    std::vector<double> centers;
    for (std::size_t b = 0; b < blobs * dim; ++b)
        centers.push_back(rng.uniform(-50.0, 50.0));
    for (std::size_t i = 0; i < n; ++i) {
        const bool in_blob = blobs > 0 && rng.uniform() < 0.7;
        const std::size_t b = in_blob ? static_cast<std::size_t>(rng.bounded(blobs)) : 0;
        for (std::size_t c = 0; c < dim; ++c) {
            if (in_blob)
                ds.coords.push_back(centers[b * dim + c] + rng.normal2().first * 2.0);
            else
                ds.coords.push_back(rng.uniform(-60.0, 60.0));
        }
    }
    return ds;
}

} // namespace helpers
