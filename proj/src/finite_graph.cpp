#include "treeforce/finite_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace tf {

FiniteGraph::FiniteGraph(std::size_t n, std::vector<kernels::Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n > 24) throw BudgetExceeded("FiniteGraph: depth > 24");
    std::uint64_t size = std::uint64_t{1} << n;
    for (auto& [a, b] : edges_) {
        if (a >= size || b >= size) throw PreconditionError("FiniteGraph: vertex out of range");
        if (a == b) throw PreconditionError("FiniteGraph: loop edge");
        if (b < a) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

const std::vector<std::vector<std::uint32_t>>& FiniteGraph::adjacency() const {
    if (adj_.empty() && !edges_.empty() ) {
        adj_.resize(vertex_count());
        for (const auto& [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
    }
    if (adj_.empty()) adj_.resize(vertex_count());
    return adj_;
}

bool FiniteGraph::is_connected() const {
    if (vertex_count() == 0) return true;
    const auto& adj = adjacency();
    std::vector<char> seen(vertex_count(), 0);
    std::deque<std::uint32_t> queue{0};
    seen[0] = 1;
    std::size_t found = 1;
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++found;
                queue.push_back(w);
            }
    }
    return found == vertex_count();
}

bool FiniteGraph::is_acyclic() const {
    // Union-find: an edge inside one component closes a cycle.
    std::vector<std::uint32_t> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [a, b] : edges_) {
        auto ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> FiniteGraph::bipartition() const {
    const auto& adj = adjacency();
    std::vector<std::uint32_t> color(vertex_count(), 2);
    for (std::uint32_t s = 0; s < vertex_count(); ++s) {
        if (color[s] != 2) continue;
        color[s] = 0;
        std::deque<std::uint32_t> queue{s};
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop_front();
            for (auto w : adj[v]) {
                if (color[w] == 2) {
                    color[w] = color[v] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::string FiniteGraph::to_dot() const {
    std::ostringstream os;
    os << "graph restriction {\n";
    for (std::uint32_t v = 0; v < vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << vertex_word(v).str() << "\"];\n";
    for (const auto& [a, b] : edges_) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

FiniteGraph restrict_graph(const GraphSpec& g, std::size_t n, RestrictOptions opt) {
    using namespace kernels;
    switch (g.kind()) {
        case GraphKind::G0:
            return FiniteGraph(n, opt.parallel ? g0_edges_omp(n, g.dense())
                                               : g0_edges_serial(n, g.dense()));
        case GraphKind::G1:
            return FiniteGraph(n, opt.parallel ? g1_edges_omp(n) : g1_edges_serial(n));
        case GraphKind::E0:
            // All finite words are tail-equivalent under the zero-padding convention,
            // so the restriction is the complete graph.
            return FiniteGraph(n, opt.parallel ? e0_edges_omp(n) : e0_edges_serial(n));
        case GraphKind::Boxes:
            return FiniteGraph(n, opt.parallel ? boxes_edges_omp(n, g.box_graph())
                                               : boxes_edges_serial(n, g.box_graph()));
        case GraphKind::Pullback: {
            if (n > 11) throw BudgetExceeded("restrict(pullback): depth > 11");
            std::vector<Edge> edges;
            std::uint64_t size = std::uint64_t{1} << n;
            for (std::uint64_t a = 0; a < size; ++a) {
                Point x = Point::word_then_zeros(Word::from_value(a, n));
                for (std::uint64_t b = a + 1; b < size; ++b) {
                    Point y = Point::word_then_zeros(Word::from_value(b, n));
                    if (g.edge(x, y).edge)
                        edges.emplace_back(static_cast<std::uint32_t>(a),
                                           static_cast<std::uint32_t>(b));
                }
            }
            return FiniteGraph(n, std::move(edges));
        }
    }
    throw PreconditionError("restrict_graph: bad kind");
}

namespace {

// DSATUR greedy: deterministic tie-breaking by saturation, then degree, then index.
std::vector<std::uint32_t> dsatur(const FiniteGraph& f, std::uint32_t& colors_used) {
    const auto& adj = f.adjacency();
    std::size_t n = f.vertex_count();
    std::vector<std::uint32_t> color(n, UINT32_MAX);
    std::vector<std::uint32_t> sat(n, 0);
    std::vector<std::vector<bool>> neighbor_colors(n);
    colors_used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != UINT32_MAX) continue;
            if (pick == n || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && adj[v].size() > adj[pick].size()))
                pick = v;
        }
        std::uint32_t c = 0;
        while (c < neighbor_colors[pick].size() && neighbor_colors[pick][c]) ++c;
        color[pick] = c;
        colors_used = std::max(colors_used, c + 1);
        for (auto w : adj[pick]) {
            if (neighbor_colors[w].size() <= c) neighbor_colors[w].resize(c + 1, false);
            if (!neighbor_colors[w][c]) {
                neighbor_colors[w][c] = true;
                ++sat[w];
            }
        }
    }
    return color;
}

// Greedy clique seeded from the highest-degree vertex.
std::uint32_t clique_lower_bound(const FiniteGraph& f) {
    const auto& adj = f.adjacency();
    std::size_t n = f.vertex_count();
    if (f.edge_count() == 0) return n > 0 ? 1 : 0;
    std::size_t seed = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (adj[v].size() > adj[seed].size()) seed = v;
    std::vector<std::uint32_t> clique{static_cast<std::uint32_t>(seed)};
    for (auto v : adj[seed]) {
        bool ok = true;
        for (auto c : clique) {
            if (c == v) continue;
            if (!std::binary_search(adj[c].begin(), adj[c].end(), v)) {
                ok = false;
                break;
            }
        }
        if (ok) clique.push_back(v);
    }
    return static_cast<std::uint32_t>(clique.size());
}

struct KColorSearch {
    const std::vector<std::vector<std::uint32_t>>& adj;
    std::uint32_t k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> color;
    std::vector<std::uint32_t> order;

    bool run() {
        color.assign(adj.size(), UINT32_MAX);
        return place(0, 0);
    }

    bool place(std::size_t idx, std::uint32_t used) {
        if (++nodes > budget) throw BudgetExceeded("chromatic_number: node budget", 0, 0);
        if (idx == order.size()) return true;
        std::uint32_t v = order[idx];
        // Symmetry breaking: never open more than one fresh color.
        std::uint32_t limit = std::min(k, used + 1);
        for (std::uint32_t c = 0; c < limit; ++c) {
            bool ok = true;
            for (auto w : adj[v])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (place(idx + 1, std::max(used, c + 1))) return true;
            color[v] = UINT32_MAX;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_number(const FiniteGraph& f, ChromaticBudget budget) {
    ChromaticResult res;
    std::size_t n = f.vertex_count();
    if (n == 0) return res;
    if (f.edge_count() == 0) {
        res.chi = 1;
        res.coloring.assign(n, 0);
        return res;
    }
    std::uint32_t ub = 0;
    std::vector<std::uint32_t> best = dsatur(f, ub);
    std::uint32_t lb = std::max<std::uint32_t>(2, clique_lower_bound(f));

    const auto& adj = f.adjacency();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return a < b;
    });

    std::uint64_t nodes = 0;
    while (lb < ub) {
        KColorSearch search{adj, ub - 1, budget.max_nodes, 0, {}, order};
        bool ok;
        try {
            ok = search.run();
        } catch (const BudgetExceeded&) {
            throw BudgetExceeded("chromatic_number: budget exhausted", lb, ub);
        }
        nodes += search.nodes;
        if (!ok) break;  // ub - 1 colors are impossible, so chi = ub
        best = search.color;
        ub = *std::max_element(best.begin(), best.end()) + 1;
    }
    res.chi = ub;
    res.coloring = best;
    res.nodes = nodes;
    if (verify_coloring(f, res.coloring, false) != -1)
        throw PreconditionError("chromatic_number: witness failed verification");
    return res;
}

std::int64_t verify_coloring(const FiniteGraph& f, const std::vector<std::uint32_t>& colors,
                             bool parallel) {
    return parallel ? kernels::first_monochromatic_edge_omp(f.edges(), colors)
                    : kernels::first_monochromatic_edge_serial(f.edges(), colors);
}

}  // namespace tf
