// Compares the serial reference kernels against the OpenMP variants and reports
// timings plus agreement. The smoke sizes run under ctest; pass --depth 14 for a
// real measurement.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <string>

#include "treeforce/finite_graph.hpp"
#include "treeforce/kernels.hpp"

using namespace tf;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
std::pair<double, std::invoke_result_t<F>> timed(F&& f) {
    auto t0 = Clock::now();
    auto r = f();
    return {ms_since(t0), std::move(r)};
}

void row(const std::string& name, double serial_ms, double omp_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   %s\n", name.c_str(),
                serial_ms, omp_ms, omp_ms > 0 ? serial_ms / omp_ms : 0.0,
                equal ? "match" : "MISMATCH");
    if (!equal) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t depth = 12;
    std::size_t pairs = 200000;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--depth")) depth = std::stoul(argv[i + 1]);
        if (!std::strcmp(argv[i], "--pairs")) pairs = std::stoul(argv[i + 1]);
    }
    std::printf("openmp: %s, threads: %d\n", kernels::omp_enabled() ? "on" : "off",
                kernels::omp_threads());

    DenseSequence seq;
    {
        auto [ts, es] = timed([&] { return kernels::g0_edges_serial(depth, seq); });
        auto [tp, ep] = timed([&] { return kernels::g0_edges_omp(depth, seq); });
        row("g0 edges @" + std::to_string(depth), ts, tp, es == ep);
    }
    {
        auto [ts, es] = timed([&] { return kernels::g1_edges_serial(depth); });
        auto [tp, ep] = timed([&] { return kernels::g1_edges_omp(depth); });
        row("g1 edges @" + std::to_string(depth), ts, tp, es == ep);

        std::vector<std::uint32_t> colors(std::size_t{1} << depth);
        for (std::size_t v = 0; v < colors.size(); ++v)
            colors[v] = static_cast<std::uint32_t>(__builtin_popcountll(v) & 1);
        auto [tvs, vs] = timed([&] { return kernels::first_monochromatic_edge_serial(es, colors); });
        auto [tvp, vp] = timed([&] { return kernels::first_monochromatic_edge_omp(es, colors); });
        row("coloring verify @" + std::to_string(depth), tvs, tvp, vs == vp);
    }
    {
        std::mt19937 rng(1);
        std::vector<std::pair<Point, Point>> batch;
        batch.reserve(pairs);
        for (std::size_t i = 0; i < pairs; ++i) {
            std::size_t pl = rng() % 8, ql = 1 + rng() % 4;
            Point x(Word::from_value(rng() & ((1u << pl) - 1), pl),
                    Word::from_value(rng() & ((1u << ql) - 1), ql));
            Point y = (rng() & 1) ? xor_point(x, one_at(rng() % 10)) : x;
            if (y == x) y = xor_point(x, one_at(0));
            batch.emplace_back(x, y);
        }
        GraphSpec g0 = GraphSpec::g0();
        auto [ts, es] = timed([&] { return kernels::edge_bulk_serial(g0, batch); });
        auto [tp, ep] = timed([&] { return kernels::edge_bulk_omp(g0, batch); });
        row("edge bulk g0 x" + std::to_string(pairs), ts, tp, es == ep);
    }
    return 0;
}
