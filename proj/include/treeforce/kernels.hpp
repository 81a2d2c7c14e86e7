#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treeforce/graphs.hpp"
#include "treeforce/word.hpp"

namespace tf::kernels {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Edge lists of the depth-n restrictions, vertices indexed by MSB-first value.
/// Serial versions are the reference; the omp versions must agree bit for bit.
std::vector<Edge> g0_edges_serial(std::size_t n, const DenseSequence& seq);
std::vector<Edge> g0_edges_omp(std::size_t n, const DenseSequence& seq);

std::vector<Edge> g1_edges_serial(std::size_t n);
std::vector<Edge> g1_edges_omp(std::size_t n);

std::vector<Edge> e0_edges_serial(std::size_t n);
std::vector<Edge> e0_edges_omp(std::size_t n);

std::vector<Edge> boxes_edges_serial(std::size_t n, const ClopenGraph& g);
std::vector<Edge> boxes_edges_omp(std::size_t n, const ClopenGraph& g);

/// Index of the first edge whose endpoints share a color, or -1.
std::int64_t first_monochromatic_edge_serial(const std::vector<Edge>& edges,
                                             const std::vector<std::uint32_t>& colors);
std::int64_t first_monochromatic_edge_omp(const std::vector<Edge>& edges,
                                          const std::vector<std::uint32_t>& colors);

/// Per-pair edge bits for a batch of point pairs.
std::vector<std::uint8_t> edge_bulk_serial(const GraphSpec& g,
                                           const std::vector<std::pair<Point, Point>>& pairs);
std::vector<std::uint8_t> edge_bulk_omp(const GraphSpec& g,
                                        const std::vector<std::pair<Point, Point>>& pairs);

bool omp_enabled();
int omp_threads();

}  // namespace tf::kernels
