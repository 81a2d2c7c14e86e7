#include "treeforce/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tf::kernels {

bool omp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int omp_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

void check_depth(std::size_t n) {
    if (n > 24) throw BudgetExceeded("restriction depth > 24");
}

// Edges of G0 at level k: (s_k 0 x, s_k 1 x) for x of length n-k-1.
void g0_edges_at(std::size_t n, const DenseSequence& seq, std::size_t k,
                 std::vector<Edge>& out) {
    Word sk = seq.at(k);
    std::uint64_t base = sk.value();  // |s_k| = k <= 24, fits
    std::size_t rest = n - k - 1;
    std::uint64_t lo = (base << 1) << rest;
    std::uint64_t hi = ((base << 1) | 1) << rest;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << rest); ++x)
        out.emplace_back(static_cast<std::uint32_t>(lo | x), static_cast<std::uint32_t>(hi | x));
}

void finalize(std::vector<Edge>& edges) {
    for (auto& e : edges)
        if (e.second < e.first) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

std::vector<Edge> g0_edges_serial(std::size_t n, const DenseSequence& seq) {
    check_depth(n);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < n; ++k) g0_edges_at(n, seq, k, edges);
    finalize(edges);
    return edges;
}

std::vector<Edge> g0_edges_omp(std::size_t n, const DenseSequence& seq) {
    check_depth(n);
    std::vector<std::vector<Edge>> parts(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k)
        g0_edges_at(n, seq, static_cast<std::size_t>(k), parts[static_cast<std::size_t>(k)]);
    std::vector<Edge> edges;
    for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
    finalize(edges);
    return edges;
}

std::vector<Edge> g1_edges_serial(std::size_t n) {
    check_depth(n);
    std::vector<Edge> edges;
    std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < size; ++v)
        for (std::size_t b = 0; b < n; ++b) {
            std::uint64_t w = v ^ (std::uint64_t{1} << b);
            if (v < w) edges.emplace_back(static_cast<std::uint32_t>(v),
                                          static_cast<std::uint32_t>(w));
        }
    finalize(edges);
    return edges;
}

std::vector<Edge> g1_edges_omp(std::size_t n) {
    check_depth(n);
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(omp_threads()));
#pragma omp parallel
    {
#ifdef _OPENMP
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& mine = parts[0];
#endif
#pragma omp for schedule(static)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(size); ++v)
            for (std::size_t b = 0; b < n; ++b) {
                std::uint64_t w = static_cast<std::uint64_t>(v) ^ (std::uint64_t{1} << b);
                if (static_cast<std::uint64_t>(v) < w)
                    mine.emplace_back(static_cast<std::uint32_t>(v),
                                      static_cast<std::uint32_t>(w));
            }
    }
    std::vector<Edge> edges;
    for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
    finalize(edges);
    return edges;
}

std::vector<Edge> e0_edges_serial(std::size_t n) {
    if (n > 12) throw BudgetExceeded("e0 restriction depth > 12");
    std::vector<Edge> edges;
    std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < size; ++v)
        for (std::uint64_t w = v + 1; w < size; ++w)
            edges.emplace_back(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w));
    return edges;
}

std::vector<Edge> e0_edges_omp(std::size_t n) {
    if (n > 12) throw BudgetExceeded("e0 restriction depth > 12");
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(size));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(size); ++v)
        for (std::uint64_t w = static_cast<std::uint64_t>(v) + 1; w < size; ++w)
            parts[static_cast<std::size_t>(v)].emplace_back(static_cast<std::uint32_t>(v),
                                                            static_cast<std::uint32_t>(w));
    std::vector<Edge> edges;
    for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
    return edges;
}

namespace {

void boxes_edges_for(std::size_t n, const ClopenGraph& g, std::size_t box_index,
                     std::vector<Edge>& out) {
    const auto& [u, v] = g.boxes()[box_index];
    std::size_t rest = n - g.depth();
    std::uint64_t lo = u.value() << rest, hi = v.value() << rest;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << rest); ++x)
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << rest); ++y)
            out.emplace_back(static_cast<std::uint32_t>(lo | x),
                             static_cast<std::uint32_t>(hi | y));
}

}  // namespace

std::vector<Edge> boxes_edges_serial(std::size_t n, const ClopenGraph& g) {
    check_depth(n);
    if (n < g.depth()) throw PreconditionError("boxes restriction below box depth");
    if (2 * (n - g.depth()) > 26) throw BudgetExceeded("boxes restriction too large");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.boxes().size(); ++i) boxes_edges_for(n, g, i, edges);
    finalize(edges);
    return edges;
}

std::vector<Edge> boxes_edges_omp(std::size_t n, const ClopenGraph& g) {
    check_depth(n);
    if (n < g.depth()) throw PreconditionError("boxes restriction below box depth");
    if (2 * (n - g.depth()) > 26) throw BudgetExceeded("boxes restriction too large");
    std::vector<std::vector<Edge>> parts(g.boxes().size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(g.boxes().size()); ++i)
        boxes_edges_for(n, g, static_cast<std::size_t>(i), parts[static_cast<std::size_t>(i)]);
    std::vector<Edge> edges;
    for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
    finalize(edges);
    return edges;
}

std::int64_t first_monochromatic_edge_serial(const std::vector<Edge>& edges,
                                             const std::vector<std::uint32_t>& colors) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (colors.at(edges[i].first) == colors.at(edges[i].second))
            return static_cast<std::int64_t>(i);
    return -1;
}

std::int64_t first_monochromatic_edge_omp(const std::vector<Edge>& edges,
                                          const std::vector<std::uint32_t>& colors) {
    std::int64_t best = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(edges.size()); ++i)
        if (colors.at(edges[static_cast<std::size_t>(i)].first) ==
            colors.at(edges[static_cast<std::size_t>(i)].second))
            best = std::min(best, i);
    return best == static_cast<std::int64_t>(edges.size()) ? -1 : best;
}

std::vector<std::uint8_t> edge_bulk_serial(const GraphSpec& g,
                                           const std::vector<std::pair<Point, Point>>& pairs) {
    std::vector<std::uint8_t> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out[i] = g.edge(pairs[i].first, pairs[i].second).edge ? 1 : 0;
    return out;
}

std::vector<std::uint8_t> edge_bulk_omp(const GraphSpec& g,
                                        const std::vector<std::pair<Point, Point>>& pairs) {
    std::vector<std::uint8_t> out(pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i)
        out[static_cast<std::size_t>(i)] =
            g.edge(pairs[static_cast<std::size_t>(i)].first,
                   pairs[static_cast<std::size_t>(i)].second)
                    .edge
                ? 1
                : 0;
    return out;
}

}  // namespace tf::kernels
