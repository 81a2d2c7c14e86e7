#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeforce/graphs.hpp"
#include "treeforce/kernels.hpp"

namespace tf {

/// Restriction of a graph on Cantor space to the words of one length.
/// Vertices are indexed by MSB-first value; vertex i denotes Word::from_value(i, n).
class FiniteGraph {
  public:
    FiniteGraph() = default;
    FiniteGraph(std::size_t n, std::vector<kernels::Edge> edges);

    std::size_t depth() const { return n_; }
    std::size_t vertex_count() const { return std::size_t{1} << n_; }
    const std::vector<kernels::Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    Word vertex_word(std::uint32_t v) const { return Word::from_value(v, n_); }

    const std::vector<std::vector<std::uint32_t>>& adjacency() const;

    bool is_connected() const;
    bool is_acyclic() const;
    /// Two-coloring by BFS when bipartite.
    std::optional<std::vector<std::uint32_t>> bipartition() const;

    std::string to_dot() const;

  private:
    std::size_t n_ = 0;
    std::vector<kernels::Edge> edges_;
    mutable std::vector<std::vector<std::uint32_t>> adj_;
};

struct RestrictOptions {
    bool parallel = true;
};

/// Exact finite restriction of the edge relation to words of length n.
FiniteGraph restrict_graph(const GraphSpec& g, std::size_t n, RestrictOptions opt = {});

struct ChromaticResult {
    std::uint32_t chi = 0;
    std::vector<std::uint32_t> coloring;
    std::uint64_t nodes = 0;  // search nodes explored
};

struct ChromaticBudget {
    std::uint64_t max_nodes = 50'000'000;
};

/// Exact chromatic number by branch and bound: DSATUR upper bound, greedy clique
/// lower bound, then exhaustive k-colorability checks. Deterministic, witness verified.
/// Throws BudgetExceeded carrying the best-known bounds.
ChromaticResult chromatic_number(const FiniteGraph& f, ChromaticBudget budget = {});

/// First monochromatic edge under the coloring, or -1 if proper.
std::int64_t verify_coloring(const FiniteGraph& f, const std::vector<std::uint32_t>& colors,
                             bool parallel = true);

}  // namespace tf
