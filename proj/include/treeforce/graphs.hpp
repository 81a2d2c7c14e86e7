#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treeforce/clopen.hpp"
#include "treeforce/word.hpp"

namespace tf {

/// Continuous word-to-word map with decidable action on eventually periodic points.
class WordMap {
  public:
    enum class Kind { Identity, XorMask, Prepend, Constant, Table };

    static WordMap identity();
    static WordMap xor_mask(Word t);
    static WordMap prepend(Word u);
    static WordMap constant(Word w);
    /// Explicit monotone table on all words up to a length; injectivity as flagged.
    static WordMap table(std::vector<std::pair<Word, Word>> entries, bool injective);

    Kind kind() const { return kind_; }
    bool injective() const { return injective_; }
    const Word& parameter() const { return param_; }

    Word apply(const Word& w) const;
    Point apply(const Point& x) const;

  private:
    WordMap(Kind k, Word param, bool inj) : kind_(k), param_(std::move(param)), injective_(inj) {}
    Kind kind_;
    Word param_;
    bool injective_;
    std::vector<std::pair<Word, Word>> table_;
};

/// Symmetric irreflexive relation given by basic open boxes [u] x [v], u != v,
/// all at one depth.
class ClopenGraph {
  public:
    ClopenGraph() = default;
    ClopenGraph(std::size_t depth, std::vector<std::pair<Word, Word>> boxes);

    std::size_t depth() const { return depth_; }
    const std::vector<std::pair<Word, Word>>& boxes() const { return boxes_; }

    /// Box containing the (ordered) pair of prefixes, if any. Inputs must have length >= depth.
    std::optional<std::size_t> box_of(const Word& a, const Word& b) const;
    bool pair_in_boxes(const Word& a, const Word& b) const { return box_of(a, b).has_value(); }

  private:
    std::size_t depth_ = 0;
    std::vector<std::pair<Word, Word>> boxes_;  // stored with first < second
};

enum class GraphKind { G0, G1, E0, Boxes, Pullback };

struct EdgeCertificate {
    bool edge = false;
    /// G0/G1: the unique differing coordinate. E0: least index from which the points agree.
    std::optional<std::uint64_t> coordinate;
    std::optional<std::size_t> box;
    std::string detail;
};

/// Edge oracle over the Cantor space: G0 (dense-sequence graph), G1 (one-coordinate
/// difference), E0 (eventual agreement), box graphs, and pull-backs.
class GraphSpec {
  public:
    static GraphSpec g0() { return g0(DenseSequence()); }
    static GraphSpec g0(DenseSequence seq);
    static GraphSpec g1();
    static GraphSpec e0();
    static GraphSpec boxes(ClopenGraph g);
    static GraphSpec pullback_of(WordMap f, GraphSpec inner);

    GraphKind kind() const { return kind_; }
    const DenseSequence& dense() const { return dense_; }
    const ClopenGraph& box_graph() const;
    const WordMap& map() const;
    const GraphSpec& inner() const;

    EdgeCertificate edge(const Point& x, const Point& y) const;

  private:
    GraphSpec() = default;
    GraphKind kind_ = GraphKind::G1;
    DenseSequence dense_;
    ClopenGraph boxes_;
    std::shared_ptr<WordMap> map_;
    std::shared_ptr<GraphSpec> inner_;
};

/// Standard pull-back: (x, y) is an edge iff (f(x), f(y)) is. Requires f injective.
GraphSpec pullback(const WordMap& f, const GraphSpec& g);

/// Pull a box graph back through f, staying in the clopen fragment.
ClopenGraph clopen_pullback(const WordMap& f, const ClopenGraph& g);

struct IndependenceWitness {
    bool found = false;
    Point x, y;
    EdgeCertificate cert;
    std::string note;
};

/// A verified edge inside a nonempty clopen set; guaranteed for G0/G1.
IndependenceWitness clopen_independence_witness(const GraphSpec& g, const ClopenSet& a,
                                                std::uint64_t probe_depth);

struct HomomorphismReport {
    bool holds = true;
    Point x, y;  // counterexample when !holds
    std::string detail;
};

/// Checks that phi maps G-edges to H-edges over all eventually periodic points of
/// presentation size <= depth.
HomomorphismReport check_homomorphism(const WordMap& phi, const GraphSpec& g, const GraphSpec& h,
                                      std::size_t depth);

/// Eventually periodic points with |prefix| + |period| <= size, canonical and distinct.
std::vector<Point> enumerate_points(std::size_t size);

struct RamseyOutcome {
    enum class Kind { FourCycle, IndependentSet, NotFound } kind = Kind::NotFound;
    std::vector<Point> points;  // 4 points; cyclically adjacent when FourCycle
};

/// Exhaustive search over 4-subsets of 18 points: a verified 4-cycle or an
/// independent 4-set.
RamseyOutcome ramsey_find(const std::vector<Point>& points, const GraphSpec& g);

}  // namespace tf
