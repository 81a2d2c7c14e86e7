#pragma once

// Test-side oracle: decides ([p_s] + t)^2 cap G0 != empty by materializing
// eventually periodic branch pairs and asking the G0 edge oracle, independently of
// the structural reduction inside is_fat.

#include "treeforce/fat.hpp"
#include "treeforce/graphs.hpp"

namespace tf_test {

using namespace tf;

// Branch pairs of p_sigma + t differing at one splitting coordinate <= probe.
inline bool direct_fat_probe(const BlockTree& p, const Word& sigma, const Word& t,
                             std::uint64_t probe) {
    GraphSpec g0 = GraphSpec::g0();
    BlockTree ps = restrict_tree(p, sigma);
    for (std::size_t j = 0;; ++j) {
        std::size_t c = ps.split_height(j);
        if (c > probe) break;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << j); ++x) {
            Word sel = Word::from_value(x, j);
            Point y0 = ps.branch(Point(sel.concat(Word::parse("0")), Word::parse("0")));
            Point y1 = ps.branch(Point(sel.concat(Word::parse("1")), Word::parse("0")));
            if (g0.edge(xor_point(y0, t), xor_point(y1, t)).edge) return true;
        }
        if (j > 14) break;  // branch pairs explode; callers keep trees small
    }
    return false;
}

// Compare the is_fat reduction against the direct search on every (s, t) pair.
inline bool reduction_matches_direct(const BlockTree& p, std::size_t split_depth,
                                     std::uint64_t probe) {
    FatProbeOptions opt;
    opt.use_tail_rule = false;  // both sides capped at the same numeric probe
    FatnessReport rep = is_fat(p, split_depth, probe, opt);
    for (const auto& e : rep.entries) {
        // Recover the selector of the splitting node e.node.
        std::size_t level = 0;
        while (p.split_height(level) < e.node.size()) ++level;
        Word sel;
        {
            Word node = p.stem();
            for (std::size_t k = 0; k < level; ++k) {
                Block b = p.block_at(k);
                std::uint8_t side = e.node[node.size()];
                sel.push_back(side);
                node = node.concat(b.side(side));
            }
        }
        bool direct = direct_fat_probe(p, sel, e.shift, probe);
        bool reduced = e.kind == FatEntry::Kind::Witness;
        if (direct != reduced) return false;
    }
    return true;
}

}  // namespace tf_test
