#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "treeforce/clopen.hpp"
#include "treeforce/word.hpp"

namespace tf {

/// Downward-closed finite set of words.
class FiniteTree {
  public:
    FiniteTree() : nodes_{Word()} {}
    explicit FiniteTree(std::vector<Word> nodes);

    static FiniteTree chain(const Word& w);
    /// Downward closure of the given words.
    static FiniteTree generated_by(const std::vector<Word>& words);

    const std::vector<Word>& nodes() const { return nodes_; }
    std::size_t height() const;
    bool contains(const Word& w) const;
    std::vector<Word> leaves() const;
    std::vector<Word> nodes_at(std::size_t depth) const;
    /// Same-length nodes have identical child patterns.
    bool is_uniform() const;

    std::string to_dot() const;

    bool operator==(const FiniteTree& o) const { return nodes_ == o.nodes_; }

  private:
    std::vector<Word> nodes_;  // length-lex sorted
};

/// One splitting step of a finitely presented tree: the two continuations after a
/// split, equal length, starting with 0 and 1.
struct Block {
    Word zero, one;
    Block() = default;
    Block(Word z, Word o);
    bool silver() const;  // one == zero with first bit flipped
    std::size_t size() const { return zero.size(); }
    const Word& side(std::uint8_t i) const { return i ? one : zero; }
    bool operator==(const Block& b) const { return zero == b.zero && one == b.one; }
};

struct TailRule {
    enum class Kind { Free, Cycle } kind = Kind::Free;
    std::vector<Block> blocks;  // nonempty for Cycle
    static TailRule free() { return {}; }
    static TailRule cycle(std::vector<Block> blocks);
    bool operator==(const TailRule& o) const { return kind == o.kind && blocks == o.blocks; }
};

/// Finitely presented E0-tree: stem plus a stream of blocks, eventually periodic.
/// Branches are stem ^ u_{x(0)}^0 ^ u_{x(1)}^1 ^ ... over selectors x.
class BlockTree {
  public:
    BlockTree() = default;
    BlockTree(Word stem, std::vector<Block> blocks, TailRule tail = TailRule::free());

    static BlockTree full_tree() { return BlockTree(Word(), {}, TailRule::free()); }

    const Word& stem() const { return stem_; }
    const std::vector<Block>& explicit_blocks() const { return blocks_; }
    const TailRule& tail() const { return tail_; }

    Block block_at(std::size_t k) const;
    /// Height of the k-th splitting level (node length at which block k starts).
    std::size_t split_height(std::size_t k) const;
    bool is_silver() const;

    bool member(const Word& w) const;
    /// The branch selected by an eventually periodic selector.
    Point branch(const Point& selector) const;
    /// All nodes of exactly the given length.
    std::vector<Word> nodes_at(std::size_t depth, std::size_t max_nodes = (1u << 20)) const;

    std::function<bool(const Word&)> oracle() const;

    bool operator==(const BlockTree& o) const {
        return stem_ == o.stem_ && blocks_ == o.blocks_ && tail_ == o.tail_;
    }

  private:
    Word stem_;
    std::vector<Block> blocks_;
    TailRule tail_;
};

/// Silver tree as a fixed-bit pattern with free (splitting) coordinates.
/// The explicit part covers [0, height); beyond it the tail rule applies.
struct SilverPattern {
    std::vector<std::uint8_t> bits;   // value at fixed coordinates; 0 at splits
    std::vector<std::size_t> splits;  // sorted split coordinates < height
    bool tail_free = true;            // all coordinates >= height split

    std::size_t height() const { return bits.size(); }
    bool is_split(std::size_t c) const;
    Word fixed_completion(const Word& v) const;  // v followed by the pattern, 0 at splits

    static SilverPattern from_tree(const BlockTree& p, std::size_t height);
    BlockTree to_tree() const;
};

/// Membership-oracle tree; the node set is fixed at construction.
class LazyTree {
  public:
    explicit LazyTree(std::function<bool(const Word&)> member) : member_(std::move(member)) {}
    bool member(const Word& w) const { return member_(w); }

    /// Every node up to `depth` has a splitting extension found within `bound`.
    bool perfect_to(std::size_t depth, std::size_t bound) const;

  private:
    std::function<bool(const Word&)> member_;
};

/// sigma |-> sigma*: canonical bijection from selector words onto splitting nodes.
Word sigma_star(const BlockTree& p, const Word& sigma, std::size_t bound = 1u << 16);
Word sigma_star(const LazyTree& p, const Word& sigma, std::size_t bound);

/// L_n(p) = { sigma* : sigma in 2^n }, cardinality exactly 2^n.
std::vector<Word> splitting_level(const BlockTree& p, std::size_t n, std::size_t bound = 1u << 16);
std::vector<Word> splitting_level(const LazyTree& p, std::size_t n, std::size_t bound);

/// The restriction p * sigma.
BlockTree restrict_tree(const BlockTree& p, const Word& sigma, std::size_t bound = 1u << 16);
LazyTree restrict_tree(const LazyTree& p, const Word& sigma, std::size_t bound);

/// q <= p and L_n(q) = L_n(p); inclusion checked on all nodes up to the depth of
/// the n-th levels plus `extra_depth`.
bool leq_n(const BlockTree& q, const BlockTree& p, std::size_t n, std::size_t extra_depth = 4,
           std::size_t bound = 1u << 16);

/// Replace the part of p above sigma* by r, mirroring the replacement across the
/// split so the E0/Silver law is preserved.
BlockTree amalgamate(const BlockTree& p, const Word& sigma, const BlockTree& r,
                     std::size_t bound = 1u << 16);

/// True iff every node of p at depth(A) is a member word of A.
bool branches_subset(const BlockTree& p, const ClopenSet& a, std::size_t bound = 1u << 20);

}  // namespace tf
