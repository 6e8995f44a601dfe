#include "dadc/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dadc/errors.hpp"

namespace dadc {
namespace {

struct Cand {
    double d;
    std::uint32_t id;
};

// Total candidate order: ascending (distance, id).
inline bool better(const Cand& a, const Cand& b) {
    return a.d != b.d ? a.d < b.d : a.id < b.id;
}

// Max-heap on `better` keeps the k best seen; top is the current worst.
struct HeapCmp {
    bool operator()(const Cand& a, const Cand& b) const { return better(a, b); }
};

void check_k(std::size_t k, std::size_t n) {
    if (k < 1 || k + 1 > n)
        throw parameter_error("k must be in [1, n-1]; got k=" + std::to_string(k) +
                              " for n=" + std::to_string(n));
}

void emit_row(std::vector<Cand>& heap, std::size_t k, std::size_t i, NeighborIndex& out) {
    std::sort(heap.begin(), heap.end(), better);
    for (std::size_t r = 0; r < k; ++r) {
        out.ids[i * k + r] = heap[r].id;
        out.dists[i * k + r] = heap[r].d;
    }
}

void heap_offer(std::vector<Cand>& heap, std::size_t k, Cand c) {
    if (heap.size() < k) {
        heap.push_back(c);
        std::push_heap(heap.begin(), heap.end(), HeapCmp{});
    } else if (better(c, heap.front())) {
        std::pop_heap(heap.begin(), heap.end(), HeapCmp{});
        heap.back() = c;
        std::push_heap(heap.begin(), heap.end(), HeapCmp{});
    }
}

} // namespace

NeighborIndex brute_force_index(const DistanceSource& src, std::size_t k) {
    const std::size_t n = src.size();
    check_k(k, n);
    NeighborIndex out;
    out.k = k;
    out.ids.resize(n * k);
    out.dists.resize(n * k);
    std::vector<Cand> heap;
    heap.reserve(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        heap.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            heap_offer(heap, k, Cand{src(i, j), static_cast<std::uint32_t>(j)});
        }
        emit_row(heap, k, i, out);
    }
    return out;
}

namespace {

struct Grid {
    std::size_t dim;
    std::int64_t cells_per_dim; // max cell index per dim is <= cells_per_dim
    double width;
    double lo[4];
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells;

    std::int64_t coord(double x, std::size_t d) const {
        auto c = static_cast<std::int64_t>(std::floor((x - lo[d]) / width));
        if (c < 0)
            c = 0;
        if (c > cells_per_dim)
            c = cells_per_dim;
        return c;
    }

    static std::uint64_t pack(const std::int64_t* c, std::size_t dim) {
        std::uint64_t key = 0;
        for (std::size_t d = 0; d < dim; ++d)
            key |= static_cast<std::uint64_t>(c[d]) << (16 * d);
        return key;
    }
};

} // namespace

NeighborIndex grid_index(const DistanceSource& src, std::size_t k) {
    const std::size_t n = src.size();
    check_k(k, n);
    if (!src.metric_mode())
        throw parameter_error("grid index requires coordinate input");
    const std::size_t dim = src.dim();
    if (dim < 2 || dim > 4)
        throw parameter_error("grid index supports 2 to 4 dimensions");

    Grid g;
    g.dim = dim;
    double hi[4];
    for (std::size_t d = 0; d < dim; ++d) {
        g.lo[d] = src.point(0)[d];
        hi[d] = src.point(0)[d];
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t d = 0; d < dim; ++d) {
            g.lo[d] = std::min(g.lo[d], src.point(i)[d]);
            hi[d] = std::max(hi[d], src.point(i)[d]);
        }
    double max_extent = 0.0;
    for (std::size_t d = 0; d < dim; ++d)
        max_extent = std::max(max_extent, hi[d] - g.lo[d]);
    // Degenerate cloud: every point in one cell; the scan is the brute scan.
    if (max_extent <= 0.0)
        return brute_force_index(src, k);

    auto cpd = static_cast<std::int64_t>(
        std::ceil(std::pow(static_cast<double>(n) / 2.0, 1.0 / static_cast<double>(dim))));
    cpd = std::max<std::int64_t>(cpd, 1);
    cpd = std::min<std::int64_t>(cpd, 0xfffe);
    g.cells_per_dim = cpd;
    g.width = max_extent / static_cast<double>(cpd);

    // Members are pushed in ascending id so within-cell scans are ordered.
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t c[4];
        for (std::size_t d = 0; d < dim; ++d)
            c[d] = g.coord(src.point(i)[d], d);
        g.cells[Grid::pack(c, dim)].push_back(static_cast<std::uint32_t>(i));
    }

    NeighborIndex out;
    out.k = k;
    out.ids.resize(n * k);
    out.dists.resize(n * k);

    std::vector<Cand> heap;
    heap.reserve(k + 1);
    std::int64_t home[4];
    std::int64_t off[4];
    const std::int64_t ring_limit = cpd + 1;

    for (std::size_t i = 0; i < n; ++i) {
        heap.clear();
        const double* pi = src.point(i);
        for (std::size_t d = 0; d < dim; ++d)
            home[d] = g.coord(pi[d], d);

        for (std::int64_t r = 0; r <= ring_limit; ++r) {
            // Enumerate cells at Chebyshev distance exactly r from home.
            for (std::size_t d = 0; d < dim; ++d)
                off[d] = -r;
            while (true) {
                std::int64_t cheb = 0;
                for (std::size_t d = 0; d < dim; ++d)
                    cheb = std::max(cheb, off[d] < 0 ? -off[d] : off[d]);
                if (cheb == r) {
                    std::int64_t c[4];
                    bool inside = true;
                    for (std::size_t d = 0; d < dim; ++d) {
                        c[d] = home[d] + off[d];
                        if (c[d] < 0 || c[d] > cpd) {
                            inside = false;
                            break;
                        }
                    }
                    if (inside) {
                        auto it = g.cells.find(Grid::pack(c, dim));
                        if (it != g.cells.end())
                            for (std::uint32_t j : it->second) {
                                if (j == i)
                                    continue;
                                heap_offer(heap, k,
                                           Cand{euclidean(pi, src.point(j), dim), j});
                            }
                    }
                }
                std::size_t d = 0;
                while (d < dim && off[d] == r) {
                    off[d] = -r;
                    ++d;
                }
                if (d == dim)
                    break;
                ++off[d];
            }
            // Any point in an unvisited cell lies beyond r cell widths in
            // some dimension; the small margin absorbs floor() rounding at
            // cell edges so results stay identical to the brute-force scan.
            if (heap.size() == k &&
                heap.front().d < (static_cast<double>(r) - 1e-6) * g.width)
                break;
        }
        emit_row(heap, k, i, out);
    }
    return out;
}

NeighborIndex build_neighbor_index(const DistanceSource& src, std::size_t k) {
    const std::size_t n = src.size();
    check_k(k, n);
    if (src.metric_mode() && src.dim() >= 2 && src.dim() <= 4 && n > 256) {
        // All-coincident clouds route to the plain scan inside grid_index.
        return grid_index(src, k);
    }
    return brute_force_index(src, k);
}

} // namespace dadc
