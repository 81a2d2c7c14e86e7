#include "treeforce/clopen.hpp"

#include <algorithm>

namespace tf {

ClopenSet::ClopenSet(std::size_t depth, std::vector<Word> words)
    : depth_(depth), words_(std::move(words)) {
    for (const auto& w : words_)
        if (w.size() != depth_)
            throw PreconditionError("ClopenSet: word length != depth");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

ClopenSet ClopenSet::full(std::size_t depth) {
    if (depth > 22) throw BudgetExceeded("ClopenSet::full: depth too large");
    std::vector<Word> words;
    words.reserve(std::size_t{1} << depth);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << depth); ++v)
        words.push_back(Word::from_value(v, depth));
    return ClopenSet(depth, std::move(words));
}

bool ClopenSet::contains_word(const Word& w) const {
    if (w.size() < depth_)
        throw PreconditionError("ClopenSet::contains_word: word shorter than depth");
    Word p = w.prefix(depth_);
    return std::binary_search(words_.begin(), words_.end(), p);
}

bool ClopenSet::contains(const Point& x) const {
    Word p = x.prefix_word(depth_);
    return std::binary_search(words_.begin(), words_.end(), p);
}

Word stem_of(const ClopenSet& a) {
    if (a.is_empty()) throw EmptyInputError("stem_of: empty clopen set");
    Word stem = a.words().front();
    std::size_t len = stem.size();
    for (const auto& w : a.words()) len = std::min(len, stem.common_prefix_length(w));
    return stem.prefix(len);
}

ClopenSet refine(const ClopenSet& a, std::size_t depth, std::size_t max_words) {
    if (depth < a.depth()) throw PreconditionError("refine: target depth below current depth");
    std::size_t extra = depth - a.depth();
    if (extra > 62 || (a.count() << extra) > max_words)
        throw BudgetExceeded("refine: materialization too large");
    std::vector<Word> words;
    words.reserve(a.count() << extra);
    for (const auto& w : a.words())
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << extra); ++v)
            words.push_back(w.concat(Word::from_value(v, extra)));
    return ClopenSet(depth, std::move(words));
}

ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b) {
    std::size_t d = std::max(a.depth(), b.depth());
    ClopenSet ra = refine(a, d), rb = refine(b, d);
    std::vector<Word> words = ra.words();
    words.insert(words.end(), rb.words().begin(), rb.words().end());
    return ClopenSet(d, std::move(words));
}

ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b) {
    // Keep the finer side's words whose truncation lies in the coarser side.
    const ClopenSet& fine = a.depth() >= b.depth() ? a : b;
    const ClopenSet& coarse = a.depth() >= b.depth() ? b : a;
    std::vector<Word> words;
    for (const auto& w : fine.words())
        if (coarse.contains_word(w)) words.push_back(w);
    return ClopenSet(fine.depth(), std::move(words));
}

ClopenSet clopen_minus(const ClopenSet& a, const ClopenSet& b) {
    std::size_t d = std::max(a.depth(), b.depth());
    ClopenSet ra = refine(a, d);
    const ClopenSet rb = b.depth() == d ? b : refine(b, d);
    std::vector<Word> words;
    for (const auto& w : ra.words())
        if (!rb.contains_word(w)) words.push_back(w);
    return ClopenSet(d, std::move(words));
}

ClopenSet clopen_shift(const ClopenSet& a, const Word& t) {
    std::size_t d = std::max(a.depth(), t.size());
    ClopenSet ra = refine(a, d);
    std::vector<Word> words;
    words.reserve(ra.count());
    for (const auto& w : ra.words()) words.push_back(xor_padded(w, t));
    return ClopenSet(d, std::move(words));
}

bool clopen_subset(const ClopenSet& a, const ClopenSet& b) {
    if (a.is_empty()) return true;
    if (a.depth() >= b.depth()) {
        for (const auto& w : a.words())
            if (!b.contains_word(w)) return false;
        return true;
    }
    return clopen_subset(refine(a, b.depth()), b);
}

}  // namespace tf
