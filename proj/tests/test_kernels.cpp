#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "treeforce/kernels.hpp"

using namespace tf;
using namespace tf::kernels;

TEST_CASE("serial and omp edge kernels agree") {
    DenseSequence seq;
    for (std::size_t n : {0u, 1u, 3u, 6u, 10u}) {
        CHECK(g0_edges_serial(n, seq) == g0_edges_omp(n, seq));
        CHECK(g1_edges_serial(n) == g1_edges_omp(n));
    }
    for (std::size_t n : {0u, 2u, 5u}) CHECK(e0_edges_serial(n) == e0_edges_omp(n));

    std::mt19937 rng(2);
    for (int round = 0; round < 10; ++round) {
        std::vector<std::pair<Word, Word>> boxes;
        for (std::uint64_t a = 0; a < 8; ++a)
            for (std::uint64_t b = a + 1; b < 8; ++b)
                if (rng() & 1) boxes.emplace_back(Word::from_value(a, 3), Word::from_value(b, 3));
        ClopenGraph g(3, boxes);
        CHECK(boxes_edges_serial(6, g) == boxes_edges_omp(6, g));
    }
}

TEST_CASE("verification kernels agree") {
    auto edges = g1_edges_serial(8);
    std::mt19937 rng(4);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::uint32_t> colors(1u << 8);
        for (auto& c : colors) c = rng() % 3;
        CHECK(first_monochromatic_edge_serial(edges, colors) ==
              first_monochromatic_edge_omp(edges, colors));
    }
    // A proper 2-coloring by parity.
    std::vector<std::uint32_t> parity(1u << 8);
    for (std::size_t v = 0; v < parity.size(); ++v)
        parity[v] = static_cast<std::uint32_t>(__builtin_popcountll(v) & 1);
    CHECK(first_monochromatic_edge_serial(edges, parity) == -1);
    CHECK(first_monochromatic_edge_omp(edges, parity) == -1);
}

TEST_CASE("bulk edge kernel agrees") {
    std::mt19937 rng(8);
    std::vector<std::pair<Point, Point>> batch;
    for (int i = 0; i < 5000; ++i) {
        std::size_t pl = rng() % 6, ql = 1 + rng() % 3;
        Point x(Word::from_value(rng() & ((1u << pl) - 1), pl),
                Word::from_value(rng() & ((1u << ql) - 1), ql));
        Point y = (rng() & 1) ? xor_point(x, one_at(rng() % 8)) : Point::word_then_zeros(
                                    Word::from_value(rng() & 63, 6));
        batch.emplace_back(x, y);
    }
    for (auto g : {GraphSpec::g0(), GraphSpec::g1(), GraphSpec::e0()})
        CHECK(edge_bulk_serial(g, batch) == edge_bulk_omp(g, batch));
}
