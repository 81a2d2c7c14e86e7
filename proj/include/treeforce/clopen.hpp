#pragma once

#include <cstdint>
#include <vector>

#include "treeforce/word.hpp"

namespace tf {

/// Finite union of cylinders, all given at one explicit depth.
class ClopenSet {
  public:
    ClopenSet() = default;
    ClopenSet(std::size_t depth, std::vector<Word> words);

    static ClopenSet full(std::size_t depth);
    static ClopenSet empty(std::size_t depth) { return ClopenSet(depth, {}); }
    static ClopenSet cylinder(const Word& w) { return ClopenSet(w.size(), {w}); }

    std::size_t depth() const { return depth_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t count() const { return words_.size(); }
    bool is_empty() const { return words_.empty(); }

    bool contains_word(const Word& w) const;  // requires |w| >= depth
    bool contains(const Point& x) const;

    bool operator==(const ClopenSet& o) const { return depth_ == o.depth_ && words_ == o.words_; }

  private:
    std::size_t depth_ = 0;
    std::vector<Word> words_;  // sorted, deduplicated, all of length depth_
};

/// Longest word extended by every member. Throws EmptyInputError on the empty set.
Word stem_of(const ClopenSet& a);

/// Same denoted set presented at a finer depth. Guarded against blow-up.
ClopenSet refine(const ClopenSet& a, std::size_t depth, std::size_t max_words = (1u << 22));

ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_minus(const ClopenSet& a, const ClopenSet& b);
/// Translate by t (zero-padded): the set { x + t : x in a }.
ClopenSet clopen_shift(const ClopenSet& a, const Word& t);

/// Denotation-level subset test; never refines the finer side.
bool clopen_subset(const ClopenSet& a, const ClopenSet& b);

}  // namespace tf
