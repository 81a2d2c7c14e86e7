#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treeforce/clopen.hpp"
#include "treeforce/trees.hpp"

namespace tf {

struct FatEntry {
    Word node;   // splitting node s
    Word shift;  // t in 2^{|s|}
    enum class Kind { Witness, TailWitness, Exhausted } kind = Kind::Exhausted;
    /// Witness: coordinate k with s_k a splitting node of p_s + t.
    std::uint64_t coordinate = 0;
    /// Witness word: s_k for explicit witnesses; the length-lex source word w with
    /// s_{index(w)} = w000... for tail witnesses (the index itself may overflow).
    Word witness;
};

struct FatnessReport {
    std::size_t split_depth = 0;
    std::uint64_t probe_depth = 0;
    std::vector<FatEntry> entries;
    bool all_fat() const;
    std::size_t exhausted_count() const;
};

struct FatProbeOptions {
    /// Allow the analytic free-tail witness rule (always valid on free-tailed
    /// trees, with indices beyond the numeric probe range).
    bool use_tail_rule = true;
    std::uint64_t max_probes = 1u << 22;
};

/// Fatness check: for every splitting node s with |s| <= split_depth and every
/// t in 2^{|s|}, search a splitting node of p_s + t lying on the dense sequence.
/// Reduction: a shifted Silver tree meets G0 in a branch pair iff such a node exists.
FatnessReport is_fat(const BlockTree& p, std::size_t split_depth, std::uint64_t probe_depth,
                     FatProbeOptions opt = {});

struct FatClaimResult {
    std::uint64_t n;
    ClopenSet set;
};

/// Clopen shift step: a positive subset A_t of A with A_t + 1_n inside A and the
/// dense word s_n below the stem of A_t + t. Postconditions are re-verified.
FatClaimResult fatclaim_step(const ClopenSet& a, const Word& s, const Word& t);

struct FatExtendBudget {
    std::size_t shift_width_cap = 14;
    std::size_t max_leaves = 1u << 18;
    std::size_t max_height = 1u << 14;
};

/// One fat level: processes every shift of the input height, placing one new
/// mirrored split per shift, leaves kept inside A.
FiniteTree fat_extend(const FiniteTree& p, const ClopenSet& a, FatExtendBudget budget = {});

struct BuilderBudget {
    std::size_t shift_width_cap = 12;  // level widths are capped here; wider shifts
                                       // are covered by the free tail analytically
    std::size_t max_height = 1u << 14;
    std::size_t levels_cap = 8;
};

/// Fat Silver tree inside a nonempty clopen set: iterates the fat-extension level
/// pass from the least member cylinder, `levels` times.
BlockTree g0_tree_inside(const ClopenSet& a, std::size_t levels, BuilderBudget budget = {});

struct Ladder {
    std::vector<std::vector<Word>> levels;  // L_0 .. L_n (terminal-node sets)
    std::vector<std::size_t> heights;       // ht(p^0) .. ht(p^n)
    std::vector<std::vector<std::uint64_t>> level_splits;  // new split coordinates per level
};

struct LadderBudget {
    std::size_t max_shift_width = 13;
    std::size_t max_terminals = 1u << 21;
    std::uint64_t probe = 1u << 15;
};

/// Canonical strong-Axiom-A ladder: level n processes all shifts of length
/// ht(p^n) in ascending witness order; each contributes one fresh splitting level
/// aligned with the shifted dense sequence, so |L_{n+1}| = |L_n| * 2^(2^ht(p^n)).
Ladder ladder(const BlockTree& p, std::size_t levels, LadderBudget budget = {});

/// The G0-forcing order at level n: equal ladders up to level n plus inclusion.
bool ladder_leq_n(const BlockTree& q, const BlockTree& p, std::size_t n,
                  LadderBudget budget = {});

struct Slalom {
    std::vector<std::size_t> width;
    std::vector<std::vector<std::uint32_t>> values;
    bool admits(std::size_t n, std::uint32_t v) const;
};

using BranchName = std::function<std::vector<std::uint32_t>(const Word&)>;

/// S(n) = n-th values of `name` across the leaves of p; width bounded by leaf count.
Slalom slalom_cover(const FiniteTree& p, const BranchName& name, std::size_t coords);

/// Membership in the shifted smallness ideal is probed only through the clopen
/// surrogate: a clopen set counts as positive iff it is nonempty.
struct IdealShiftProbe {
    std::uint64_t shift_index = 0;
    ClopenSet base;
    bool positive() const { return !base.is_empty(); }
};

}  // namespace tf
