#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "treeforce/trees.hpp"

using namespace tf;

namespace {

Block blk(const char* z, const char* o) { return Block(Word::parse(z), Word::parse(o)); }

BlockTree random_block_tree(std::mt19937& rng, bool silver) {
    std::size_t stem_len = rng() % 3;
    Word stem = Word::from_value(rng() & ((1u << stem_len) - 1), stem_len);
    std::vector<Block> blocks;
    std::size_t count = rng() % 4;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t len = rng() % 3;
        Word seg = Word::from_value(rng() & ((1u << len) - 1), len);
        Word other = silver ? seg : Word::from_value(rng() & ((1u << len) - 1), len);
        blocks.emplace_back(Word::parse("0").concat(seg), Word::parse("1").concat(other));
    }
    return BlockTree(stem, std::move(blocks), TailRule::free());
}

}  // namespace

TEST_CASE("finite tree basics") {
    FiniteTree t = FiniteTree::generated_by({Word::parse("010"), Word::parse("00")});
    CHECK(t.contains(Word::parse("01")));
    CHECK(t.height() == 3);
    CHECK(t.leaves().size() == 2);
    CHECK_THROWS_AS(FiniteTree({Word::parse("01")}), PreconditionError);

    FiniteTree chain = FiniteTree::chain(Word::parse("0101"));
    CHECK(chain.is_uniform());
    CHECK(chain.leaves().size() == 1);
}

TEST_CASE("block membership and the silver flag") {
    BlockTree p(Word::parse("1"), {blk("00", "10"), blk("01", "11")});
    CHECK(p.member(Word::parse("1")));
    CHECK(p.member(Word::parse("100")));
    CHECK(p.member(Word::parse("10001")));
    CHECK_FALSE(p.member(Word::parse("101")));
    CHECK_FALSE(p.member(Word::parse("0")));
    CHECK(p.is_silver());

    BlockTree q(Word(), {blk("01", "10")});
    CHECK_FALSE(q.is_silver());
    CHECK(BlockTree::full_tree().is_silver());
}

TEST_CASE("sigma star on block trees") {
    CHECK(sigma_star(BlockTree::full_tree(), Word::parse("0")).str() == "0");
    BlockTree stem1(Word::parse("1"), {});
    CHECK(sigma_star(stem1, Word()).str() == "1");
    BlockTree p(Word(), {blk("00", "10")});
    CHECK(sigma_star(p, Word::parse("1")).str() == "10");
}

TEST_CASE("sigma star via the membership oracle matches the block fast path") {
    std::mt19937 rng(19);
    for (int round = 0; round < 60; ++round) {
        BlockTree p = random_block_tree(rng, rng() & 1);
        LazyTree lazy(p.oracle());
        for (std::uint64_t v = 0; v < 8; ++v) {
            Word sigma = Word::from_value(v, 3);
            CHECK(sigma_star(p, sigma) == sigma_star(lazy, sigma, 64));
        }
    }
}

TEST_CASE("splitting levels") {
    auto l2 = splitting_level(BlockTree::full_tree(), 2);
    CHECK(l2.size() == 4);
    for (const auto& w : l2) CHECK(w.size() == 2);

    // Tree fixing coordinate 1 to 0.
    BlockTree fix1(Word(), {blk("00", "10")});
    auto l1 = splitting_level(fix1, 1);
    CHECK(l1 == std::vector<Word>{Word::parse("00"), Word::parse("10")});

    BlockTree stem1(Word::parse("1"), {});
    CHECK(splitting_level(stem1, 0) == std::vector<Word>{Word::parse("1")});
}

TEST_CASE("sigma star is an order isomorphism") {
    std::mt19937 rng(29);
    for (int round = 0; round < 40; ++round) {
        BlockTree p = random_block_tree(rng, true);
        std::vector<std::pair<Word, Word>> pairs;
        for (std::size_t len = 0; len <= 5; ++len)
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
                Word sigma = Word::from_value(v, len);
                pairs.emplace_back(sigma, sigma_star(p, sigma));
            }
        for (const auto& [s1, t1] : pairs)
            for (const auto& [s2, t2] : pairs) {
                if (s1 == s2) continue;
                CHECK(t1 != t2);
                CHECK(s1.is_prefix_of(s2) == t1.is_prefix_of(t2));
            }
    }
}

TEST_CASE("restrict tree") {
    BlockTree full = BlockTree::full_tree();
    CHECK(restrict_tree(full, Word::parse("1")).stem().str() == "1");
    BlockTree p(Word(), {blk("01", "10")});
    CHECK(restrict_tree(p, Word()) == p);
    BlockTree r = restrict_tree(p, Word::parse("0"));
    CHECK(r.stem().str() == "01");
    CHECK(r.explicit_blocks().empty());
    CHECK(r.tail().kind == TailRule::Kind::Free);
}

TEST_CASE("restriction composes") {
    std::mt19937 rng(37);
    for (int round = 0; round < 40; ++round) {
        BlockTree p = random_block_tree(rng, rng() & 1);
        for (std::uint64_t v = 0; v < 4; ++v) {
            Word sigma = Word::from_value(v, 2);
            for (std::uint8_t i : {0, 1}) {
                Word extended = sigma.concat(i ? Word::parse("1") : Word::parse("0"));
                BlockTree direct = restrict_tree(p, extended);
                BlockTree staged =
                    restrict_tree(restrict_tree(p, sigma), i ? Word::parse("1") : Word::parse("0"));
                CHECK(direct == staged);
            }
        }
    }
}

TEST_CASE("leq_n") {
    BlockTree full = BlockTree::full_tree();
    CHECK(leq_n(full, full, 3));

    // Tree fixing coordinate 5 to 0: agrees with the full tree on L_1 but not deep.
    BlockTree fix5(Word(), {blk("0", "1"), blk("0", "1"), blk("0", "1"), blk("0", "1"),
                            blk("00", "10")});
    CHECK(leq_n(fix5, full, 1));
    CHECK_FALSE(leq_n(fix5, full, 5));

    BlockTree stem0(Word::parse("0"), {});
    CHECK_FALSE(leq_n(stem0, full, 0));
}

TEST_CASE("amalgamate") {
    BlockTree full = BlockTree::full_tree();

    // Identity amalgamation.
    BlockTree r = restrict_tree(full, Word::parse("0"));
    BlockTree back = amalgamate(full, Word::parse("0"), r);
    CHECK(back.member(Word::parse("11")));
    CHECK(back.member(Word::parse("00")));
    CHECK(leq_n(back, full, 1));

    // Silver repair: grafting a stem "01" above the root split fixes coordinate 1 to 1.
    BlockTree graft(Word::parse("01"), {});
    BlockTree fixed = amalgamate(full, Word::parse("0"), graft);
    CHECK(fixed.member(Word::parse("01")));
    CHECK(fixed.member(Word::parse("11")));
    CHECK_FALSE(fixed.member(Word::parse("00")));
    CHECK_FALSE(fixed.member(Word::parse("10")));
    CHECK(fixed.is_silver());

    // Incomparable graft is rejected.
    BlockTree wrong(Word::parse("10"), {});
    CHECK_THROWS_AS(amalgamate(full, Word::parse("0"), wrong), PreconditionError);
}

TEST_CASE("branches subset") {
    BlockTree stem00(Word::parse("00"), {});
    ClopenSet a(2, {Word::parse("00"), Word::parse("01")});
    CHECK(branches_subset(stem00, a));
    CHECK_FALSE(branches_subset(BlockTree::full_tree(), ClopenSet::cylinder(Word::parse("0"))));
    BlockTree stem0(Word::parse("0"), {});
    CHECK(branches_subset(stem0, a));
}

TEST_CASE("silver law and e0 law hold to depth 20") {
    std::mt19937 rng(43);
    for (int round = 0; round < 30; ++round) {
        BlockTree p = random_block_tree(rng, true);
        // s^frown 0^frown x in p iff s^frown 1^frown x in p at every splitting node.
        for (std::uint64_t v = 0; v < 4; ++v) {
            Word s = sigma_star(p, Word::from_value(v, 2));
            for (std::uint64_t x = 0; x < 32; ++x) {
                Word tail = Word::from_value(x, 5);
                Word w0 = s.concat(Word::parse("0")).concat(tail);
                Word w1 = s.concat(Word::parse("1")).concat(tail);
                CHECK(p.member(w0) == p.member(w1));
            }
        }
    }
    // E0 law: the two continuations of each block are syntactically aligned.
    for (int round = 0; round < 30; ++round) {
        BlockTree p = random_block_tree(rng, false);
        for (std::size_t k = 0; k < 4; ++k) {
            Block b = p.block_at(k);
            CHECK(b.zero.size() == b.one.size());
            CHECK(b.zero[0] == 0);
            CHECK(b.one[0] == 1);
        }
    }
}

TEST_CASE("malformed presentations are rejected") {
    CHECK_THROWS_AS(TailRule::cycle({}), PreconditionError);
    CHECK_THROWS_AS(Block(Word::parse("0"), Word::parse("10")), PreconditionError);
    CHECK_THROWS_AS(Block(Word::parse("1"), Word::parse("0")), PreconditionError);
    CHECK_THROWS_AS(Block(Word(), Word()), PreconditionError);
}

TEST_CASE("bound-exceeded on oracle searches") {
    // A chain has no splitting node, so the stem search exhausts its bound.
    LazyTree chain([](const Word& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) return false;
        return true;
    });
    CHECK_THROWS_AS(sigma_star(chain, Word::parse("0"), 8), BudgetExceeded);
}

TEST_CASE("lazy tree perfectness probe") {
    LazyTree full(BlockTree::full_tree().oracle());
    CHECK(full.perfect_to(4, 16));
    // A single branch is not perfect.
    LazyTree chain([](const Word& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) return false;
        return true;
    });
    CHECK_FALSE(chain.perfect_to(2, 16));
}
