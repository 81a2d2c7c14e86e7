#include "treeforce/fat.hpp"

#include <algorithm>
#include <map>

namespace tf {

namespace {

// Precomputed matching data: where the dense words sit against the fixed bits.
struct PatternIndex {
    const SilverPattern& sp;
    // last_fixed_one[i]: greatest fixed coordinate <= i carrying bit 1, or npos.
    std::vector<std::size_t> last_fixed_one;
    static constexpr std::size_t npos = SIZE_MAX;

    explicit PatternIndex(const SilverPattern& pattern) : sp(pattern) {
        last_fixed_one.resize(sp.height());
        std::size_t last = npos;
        for (std::size_t i = 0; i < sp.height(); ++i) {
            if (!sp.is_split(i) && sp.bits[i] == 1) last = i;
            last_fixed_one[i] = last;
        }
    }

    // Least cc such that s_c matches every fixed coordinate on [cc, c).
    std::size_t match_from(std::uint64_t c) const {
        if (c == 0) return 0;
        Word e = length_lex_word(c);
        std::size_t lo = 0;
        // Zero-padded region [|e|, c): mismatch exactly at fixed ones.
        std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(c), sp.height());
        if (top > e.size()) {
            std::size_t last = last_fixed_one[top - 1];
            if (last != npos && last >= e.size()) lo = last + 1;
        }
        // Explicit part [0, |e|).
        for (std::size_t j = std::min<std::size_t>(e.size(), sp.height()); j > lo;) {
            --j;
            if (!sp.is_split(j) && e[j] != sp.bits[j]) {
                lo = j + 1;
                break;
            }
        }
        return lo;
    }

    // s_c restricted to its first `len` coordinates, built from e_c.
    Word dense_prefix(std::uint64_t c, std::size_t len) const {
        Word e = length_lex_word(c);
        std::vector<std::uint8_t> out;
        out.reserve(len);
        for (std::size_t i = 0; i < len; ++i) out.push_back(i < e.size() ? e[i] : 0);
        return Word(std::move(out));
    }
};

}  // namespace

bool FatnessReport::all_fat() const {
    for (const auto& e : entries)
        if (e.kind == FatEntry::Kind::Exhausted) return false;
    return true;
}

std::size_t FatnessReport::exhausted_count() const {
    std::size_t n = 0;
    for (const auto& e : entries)
        if (e.kind == FatEntry::Kind::Exhausted) ++n;
    return n;
}

FatnessReport is_fat(const BlockTree& p, std::size_t split_depth, std::uint64_t probe_depth,
                     FatProbeOptions opt) {
    if (!p.is_silver()) throw PreconditionError("is_fat: tree is not Silver");
    FatnessReport rep;
    rep.split_depth = split_depth;
    rep.probe_depth = probe_depth;

    // Coordinates 0..probe_depth inclusive take part in the witness search.
    SilverPattern sp = SilverPattern::from_tree(p, static_cast<std::size_t>(probe_depth) + 1);
    PatternIndex idx(sp);

    // Witness map: (c, s_k restricted to c) -> least split k certifying the pair.
    std::map<std::pair<std::size_t, Word>, std::uint64_t> witness;
    for (std::size_t k : sp.splits) {
        std::size_t lo = idx.match_from(k);
        for (std::size_t cc = lo; cc <= std::min(split_depth, k); ++cc) {
            auto key = std::make_pair(cc, idx.dense_prefix(k, cc));
            if (!witness.count(key)) witness.emplace(key, k);
        }
    }

    std::uint64_t probes = 0;
    for (std::size_t c : sp.splits) {
        if (c > split_depth) break;
        if (c > 62) throw BudgetExceeded("is_fat: shift width beyond 62");
        auto nodes = p.nodes_at(c, 1u << 18);
        for (const auto& s : nodes) {
            probes += std::uint64_t{1} << c;
            if (probes > opt.max_probes) throw BudgetExceeded("is_fat: probe budget");
            for (std::uint64_t tv = 0; tv < (std::uint64_t{1} << c); ++tv) {
                Word t = Word::from_value(tv, c);
                Word v = xor_padded(s, t);
                FatEntry entry;
                entry.node = s;
                entry.shift = t;
                auto it = witness.find(std::make_pair(c, v));
                if (it != witness.end()) {
                    entry.kind = FatEntry::Kind::Witness;
                    entry.coordinate = it->second;
                    entry.witness = dense_seq(it->second);
                } else if (sp.tail_free && opt.use_tail_rule) {
                    // Free tail: e_k = v followed by the fixed completion gives a
                    // splitting node s_k of the shifted restriction; the index
                    // 2^|e_k| - 1 + val(e_k) lands in the all-free region.
                    entry.kind = FatEntry::Kind::TailWitness;
                    entry.witness = sp.fixed_completion(v);
                    entry.coordinate = 0;
                } else {
                    entry.kind = FatEntry::Kind::Exhausted;
                }
                rep.entries.push_back(std::move(entry));
            }
        }
    }
    return rep;
}

FatClaimResult fatclaim_step(const ClopenSet& a, const Word& s, const Word& t) {
    if (a.is_empty()) throw EmptyInputError("fatclaim_step: empty set");
    Word stem = stem_of(a);
    if (!stem.is_prefix_of(s)) throw PreconditionError("fatclaim_step: s does not extend the stem");
    if (s.size() != t.size()) throw PreconditionError("fatclaim_step: |t| != |s|");

    const Word u = a.words().front();
    Word w = xor_padded(u, t);
    std::uint64_t n = least_dense_index_extending(w, u.size());
    Word sn = dense_seq(n);
    Word core = xor_padded(sn, t);  // t zero-padded; |core| = n

    std::vector<Word> words{core.concat(Word::parse("0")), core.concat(Word::parse("1"))};
    ClopenSet at(static_cast<std::size_t>(n) + 1, std::move(words));

    // Re-verify positivity and the two Claim postconditions.
    if (at.is_empty()) throw PreconditionError("fatclaim_step: A_t empty");
    if (!clopen_subset(at, a)) throw PreconditionError("fatclaim_step: A_t not inside A");
    ClopenSet shifted = clopen_shift(at, one_at(static_cast<std::size_t>(n)));
    if (!clopen_subset(shifted, a))
        throw PreconditionError("fatclaim_step: A_t + 1_n leaves A");
    Word st = stem_of(clopen_shift(at, t));
    if (!sn.is_prefix_of(st))
        throw PreconditionError("fatclaim_step: s_n not below stem of A_t + t");
    return {n, std::move(at)};
}

namespace {

SilverPattern pattern_of_uniform(const FiniteTree& p) {
    if (!p.is_uniform()) throw PreconditionError("fat_extend: tree is not uniform");
    SilverPattern sp;
    sp.tail_free = false;
    std::size_t h = p.height();
    Word node;  // lex-least path
    for (std::size_t d = 0; d < h; ++d) {
        bool c0 = p.contains(node.concat(Word::parse("0")));
        bool c1 = p.contains(node.concat(Word::parse("1")));
        if (c0 && c1) {
            sp.splits.push_back(d);
            sp.bits.push_back(0);
            node.push_back(0);
        } else if (c0 || c1) {
            std::uint8_t b = c1 ? 1 : 0;
            sp.bits.push_back(b);
            node.push_back(b);
        } else {
            throw PreconditionError("fat_extend: leaves below the stated height");
        }
    }
    return sp;
}

FiniteTree materialize_pattern(const SilverPattern& sp, std::size_t max_leaves) {
    if (sp.splits.size() > 24 || (std::size_t{1} << sp.splits.size()) > max_leaves)
        throw BudgetExceeded("fat_extend: leaf count");
    std::vector<Word> leaves;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << sp.splits.size()); ++sel) {
        std::vector<std::uint8_t> bits(sp.bits);
        for (std::size_t i = 0; i < sp.splits.size(); ++i)
            bits[sp.splits[i]] = static_cast<std::uint8_t>((sel >> i) & 1);
        leaves.push_back(Word(std::move(bits)));
    }
    return FiniteTree::generated_by(leaves);
}

// One fat level: every shift of the given width places one fresh mirrored split,
// in ascending witness order; the new fixed bits follow the dense word (zeros).
void level_pass(SilverPattern& sp, std::size_t width, std::size_t max_height) {
    if (width > 62) throw BudgetExceeded("fat level: shift width beyond 62");
    Word u(sp.bits);  // lex-least leaf; split coordinates carry 0
    std::vector<std::pair<std::uint64_t, std::uint64_t>> passes;
    for (std::uint64_t tv = 0; tv < (std::uint64_t{1} << width); ++tv) {
        Word t = Word::from_value(tv, width);
        Word w = xor_padded(u, t);
        if (w.size() < sp.height()) w = w.concat(Word::zeros(sp.height() - w.size()));
        passes.emplace_back(least_dense_index_extending(w, sp.height()), tv);
    }
    std::sort(passes.begin(), passes.end());
    for (std::size_t i = 0; i + 1 < passes.size(); ++i)
        if (passes[i].first == passes[i + 1].first)
            throw PreconditionError("fat level: witness collision");
    for (const auto& [k, tv] : passes) {
        (void)tv;
        if (k + 1 > max_height) throw BudgetExceeded("fat level: height cap");
        while (sp.bits.size() < k) sp.bits.push_back(0);
        sp.splits.push_back(sp.bits.size());
        sp.bits.push_back(0);
    }
}

}  // namespace

FiniteTree fat_extend(const FiniteTree& p, const ClopenSet& a, FatExtendBudget budget) {
    std::size_t h = p.height();
    if (h < a.depth()) throw PreconditionError("fat_extend: tree shorter than the set depth");
    for (const auto& leaf : p.leaves())
        if (!a.contains_word(leaf)) throw PreconditionError("fat_extend: leaf outside the set");
    if (h > budget.shift_width_cap) throw BudgetExceeded("fat_extend: shift width");

    SilverPattern sp = pattern_of_uniform(p);
    level_pass(sp, h, budget.max_height);
    return materialize_pattern(sp, budget.max_leaves);
}

BlockTree g0_tree_inside(const ClopenSet& a, std::size_t levels, BuilderBudget budget) {
    if (a.is_empty()) throw EmptyInputError("g0_tree_inside: empty set");
    if (levels > budget.levels_cap) throw BudgetExceeded("g0_tree_inside: levels cap");

    SilverPattern sp;
    const Word u0 = a.words().front();
    sp.bits.assign(u0.bits().begin(), u0.bits().end());
    sp.tail_free = true;

    for (std::size_t level = 0; level < levels; ++level) {
        std::size_t width = std::min(sp.height(), budget.shift_width_cap);
        level_pass(sp, width, budget.max_height);
    }
    BlockTree out = sp.to_tree();
    if (!branches_subset(out, a))
        throw PreconditionError("g0_tree_inside: branches left the set");
    return out;
}

Ladder ladder(const BlockTree& p, std::size_t levels, LadderBudget budget) {
    if (!p.is_silver()) throw PreconditionError("ladder: tree is not Silver");
    SilverPattern sp = SilverPattern::from_tree(p, static_cast<std::size_t>(budget.probe));
    PatternIndex idx(sp);

    Ladder lad;
    lad.levels.push_back({p.stem()});
    lad.heights.push_back(p.stem().size());

    std::vector<Word> terminals{p.stem()};
    std::size_t h = p.stem().size();

    for (std::size_t lev = 0; lev < levels; ++lev) {
        if (h > budget.max_shift_width) throw BudgetExceeded("ladder: shift width");
        const Word t0 = terminals.front();
        std::size_t h_cur = h;

        // Greedy ascending witnesses over the unprocessed shifts: the least fresh
        // split k with s_k extending t0 + t and matching the fixed coordinates.
        std::vector<bool> done(std::size_t{1} << h, false);
        std::vector<std::uint64_t> split_list;
        std::vector<Word> sections;
        for (std::size_t step = 0; step < (std::size_t{1} << h); ++step) {
            std::uint64_t best_k = UINT64_MAX;
            std::size_t best_t = 0;
            for (std::uint64_t tv = 0; tv < (std::uint64_t{1} << h); ++tv) {
                if (done[static_cast<std::size_t>(tv)]) continue;
                Word v = xor_padded(t0, Word::from_value(tv, h));
                std::uint64_t found = UINT64_MAX;
                for (std::size_t c : sp.splits) {
                    if (c < h_cur) continue;
                    if (c > budget.probe) break;
                    if (idx.match_from(c) > h) continue;
                    if (idx.dense_prefix(c, h) != v) continue;
                    found = c;
                    break;
                }
                if (found == UINT64_MAX && sp.tail_free) {
                    Word wv = sp.fixed_completion(v);
                    if (wv.one_support() <= 62)
                        found = least_dense_index_extending(
                            wv, std::max<std::uint64_t>(h_cur, sp.height()));
                }
                if (found < best_k) {
                    best_k = found;
                    best_t = static_cast<std::size_t>(tv);
                }
            }
            if (best_k == UINT64_MAX)
                throw FatnessMissing("ladder: no witness for a shift at height " +
                                     std::to_string(h) + " within the probe");
            done[best_t] = true;
            if (best_k > (std::uint64_t{1} << 20))
                throw BudgetExceeded("ladder: witness beyond materializable range");
            Word sk = dense_seq(best_k);
            sections.push_back(sk.range(h_cur, static_cast<std::size_t>(best_k)));
            split_list.push_back(best_k);
            h_cur = static_cast<std::size_t>(best_k) + 1;
        }

        // Path subtree: every terminal extends through each forced section and
        // doubles at each new split.
        std::vector<Word> next = terminals;
        for (std::size_t j = 0; j < split_list.size(); ++j) {
            if (next.size() * 2 > budget.max_terminals)
                throw BudgetExceeded("ladder: terminal count");
            std::vector<Word> grown;
            grown.reserve(next.size() * 2);
            for (const auto& w : next) {
                Word base = w.concat(sections[j]);
                grown.push_back(base.concat(Word::parse("0")));
                grown.push_back(base.concat(Word::parse("1")));
            }
            next = std::move(grown);
        }
        std::sort(next.begin(), next.end());
        terminals = std::move(next);
        h = h_cur;
        lad.levels.push_back(terminals);
        lad.heights.push_back(h);
        lad.level_splits.push_back(split_list);
    }
    return lad;
}

bool ladder_leq_n(const BlockTree& q, const BlockTree& p, std::size_t n, LadderBudget budget) {
    Ladder lq = ladder(q, n, budget);
    Ladder lp = ladder(p, n, budget);
    for (std::size_t i = 0; i <= n && i < lq.levels.size(); ++i)
        if (lq.levels[i] != lp.levels[i]) return false;
    std::size_t depth = lp.heights.at(std::min(n, lp.heights.size() - 1));
    for (std::size_t d = 0; d <= depth; ++d)
        for (const auto& w : q.nodes_at(d, 1u << 18))
            if (!p.member(w)) return false;
    return true;
}

bool Slalom::admits(std::size_t n, std::uint32_t v) const {
    if (n >= values.size()) return false;
    return std::binary_search(values[n].begin(), values[n].end(), v);
}

Slalom slalom_cover(const FiniteTree& p, const BranchName& name, std::size_t coords) {
    Slalom s;
    s.width.assign(coords, 0);
    s.values.assign(coords, {});
    auto leaves = p.leaves();
    for (const auto& leaf : leaves) {
        auto seq = name(leaf);
        if (seq.size() < coords)
            throw PreconditionError("slalom_cover: name partial on a leaf");
        for (std::size_t n = 0; n < coords; ++n) s.values[n].push_back(seq[n]);
    }
    for (std::size_t n = 0; n < coords; ++n) {
        auto& v = s.values[n];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        s.width[n] = leaves.size();
        if (v.size() > s.width[n]) throw PreconditionError("slalom_cover: width violation");
    }
    return s;
}

}  // namespace tf
