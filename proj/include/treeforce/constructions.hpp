#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "treeforce/graphs.hpp"
#include "treeforce/trees.hpp"

namespace tf {

enum class Relation { E0, G1 };

/// Outcome of the agreement test ([q*0] x [q*1]) cap relation subseteq G.
struct AgreementReport {
    bool agrees = false;
    std::size_t pairs_checked = 0;
    // Refutation data: a related cross pair outside every box.
    Point z0, z1;
    Word prefix0, prefix1;
};

/// Decides agreement of an E0/Silver condition with a box graph by enumerating the
/// depth-d prefixes of all related cross pairs.
AgreementReport agrees_with(const BlockTree& q, const ClopenGraph& g, Relation rel);

struct Refutation {
    Point z0, z1;
    Word s0, s1;  // basic boxes around the witnesses, disjoint from G
};

using Refuter = std::function<std::optional<Refutation>(const BlockTree&)>;

Refuter default_refuter(const ClopenGraph& g, Relation rel);

/// Fusion construction: builds a condition below p whose branch set is G-independent,
/// presented to depth_out. Throws RefuterFailure when some restriction cannot be
/// refuted (agreeing conditions are dense below it).
BlockTree independent_tree(const BlockTree& p, const ClopenGraph& g, Relation rel,
                           const Refuter& refuter, std::size_t depth_out);

/// Re-verification: no related cross pair at any split of q lands in a box,
/// exhaustively to the given depth.
bool verify_independence(const BlockTree& q, const ClopenGraph& g, Relation rel,
                         std::size_t depth);

struct CliqueTree {
    FiniteTree tree;
    std::size_t split_levels = 0;
    std::size_t checked_pairs = 0;
};

/// Finite-depth clique evidence: a ladder whose splits carry verified box-product
/// inclusions [r*0] x [r*1] subseteq G. Splits stop when no agreeing restriction
/// with a verified inclusion exists; throws DensityFailure if even the first split
/// fails.
CliqueTree perfect_clique(const BlockTree& p, const ClopenGraph& g, Relation rel,
                          std::size_t depth_out, std::size_t search_depth = 3);

/// Verified: every pair of leaves diverging before the box depth sits inside a box.
bool verify_clique_tree(const FiniteTree& t, const ClopenGraph& g);

struct DichotomyBudget {
    std::size_t sigma_depth = 4;
    std::size_t refine_depth = 2;
    std::size_t depth_out = 12;
};

struct DichotomyOutcome {
    enum class Kind { IndependentTree, CliqueEvidence, Undecided } kind = Kind::Undecided;
    BlockTree tree;          // IndependentTree
    CliqueTree clique;       // CliqueEvidence
    Word witness_sigma;      // restriction below which nothing agreed
    std::string trace;
};

/// Bounded search for the density dichotomy: either a restriction with no agreeing
/// refinement (then an independent tree is built below it), or budget-certified
/// density evidence, or Undecided.
DichotomyOutcome density_dichotomy(const BlockTree& p, const ClopenGraph& g, Relation rel,
                                   DichotomyBudget budget = {});

/// First `count` words of the least length covering them, lexicographically.
std::vector<Word> sample_selectors(std::size_t count);

/// Four points of [r] forming a verified 4-cycle in the box graph. Requires an
/// agreeing Silver condition; throws BudgetExceeded with the sampled branches in
/// the message when no cycle verifies.
std::array<Point, 4> four_cycle(const BlockTree& r, const ClopenGraph& g,
                                std::size_t bound = 1u << 12);

struct ImageCertificate {
    std::vector<Word> image_words;
    bool independent = false;
};

/// Independent image through an injective map: pulls the graph back, builds an
/// independent tree, and certifies that the image cylinders are pairwise non-edges.
std::pair<BlockTree, ImageCertificate> independent_image(const WordMap& f, const ClopenGraph& g,
                                                         Relation rel, const BlockTree& p,
                                                         std::size_t depth_out);

}  // namespace tf
