#include "treeforce/trees.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace tf {

FiniteTree::FiniteTree(std::vector<Word> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    if (nodes_.empty() || !nodes_.front().empty())
        throw PreconditionError("FiniteTree: must contain the empty word");
    for (const auto& w : nodes_)
        if (!w.empty() && !contains(w.prefix(w.size() - 1)))
            throw PreconditionError("FiniteTree: not downward closed");
}

FiniteTree FiniteTree::chain(const Word& w) {
    std::vector<Word> nodes;
    for (std::size_t i = 0; i <= w.size(); ++i) nodes.push_back(w.prefix(i));
    return FiniteTree(std::move(nodes));
}

FiniteTree FiniteTree::generated_by(const std::vector<Word>& words) {
    std::vector<Word> nodes;
    nodes.push_back(Word());
    for (const auto& w : words)
        for (std::size_t i = 0; i <= w.size(); ++i) nodes.push_back(w.prefix(i));
    return FiniteTree(std::move(nodes));
}

std::size_t FiniteTree::height() const {
    std::size_t h = 0;
    for (const auto& w : nodes_) h = std::max(h, w.size());
    return h;
}

bool FiniteTree::contains(const Word& w) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), w);
}

std::vector<Word> FiniteTree::leaves() const {
    std::vector<Word> out;
    for (const auto& w : nodes_) {
        Word c0 = w.concat(Word::parse("0"));
        Word c1 = w.concat(Word::parse("1"));
        if (!contains(c0) && !contains(c1)) out.push_back(w);
    }
    return out;
}

std::vector<Word> FiniteTree::nodes_at(std::size_t depth) const {
    std::vector<Word> out;
    for (const auto& w : nodes_)
        if (w.size() == depth) out.push_back(w);
    return out;
}

bool FiniteTree::is_uniform() const {
    for (std::size_t d = 0; d < height(); ++d) {
        auto level = nodes_at(d);
        if (level.empty()) continue;
        bool first = true;
        bool has0 = false, has1 = false;
        for (const auto& w : level) {
            bool c0 = contains(w.concat(Word::parse("0")));
            bool c1 = contains(w.concat(Word::parse("1")));
            if (first) {
                has0 = c0;
                has1 = c1;
                first = false;
            } else if (c0 != has0 || c1 != has1) {
                return false;
            }
        }
    }
    return true;
}

std::string FiniteTree::to_dot() const {
    std::ostringstream os;
    os << "graph tree {\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        os << "  n" << i << " [label=\"" << (nodes_[i].empty() ? "()" : nodes_[i].str())
           << "\"];\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].empty()) continue;
        Word parent = nodes_[i].prefix(nodes_[i].size() - 1);
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), parent);
        os << "  n" << (it - nodes_.begin()) << " -- n" << i << ";\n";
    }
    os << "}\n";
    return os.str();
}

Block::Block(Word z, Word o) : zero(std::move(z)), one(std::move(o)) {
    if (zero.empty() || zero.size() != one.size())
        throw PreconditionError("Block: sides must be nonempty of equal length");
    if (zero[0] != 0 || one[0] != 1)
        throw PreconditionError("Block: sides must start with 0 and 1");
}

bool Block::silver() const {
    for (std::size_t i = 1; i < zero.size(); ++i)
        if (zero[i] != one[i]) return false;
    return true;
}

TailRule TailRule::cycle(std::vector<Block> blocks) {
    if (blocks.empty()) throw PreconditionError("TailRule::cycle: empty cycle");
    TailRule t;
    t.kind = Kind::Cycle;
    t.blocks = std::move(blocks);
    return t;
}

BlockTree::BlockTree(Word stem, std::vector<Block> blocks, TailRule tail)
    : stem_(std::move(stem)), blocks_(std::move(blocks)), tail_(std::move(tail)) {
    if (tail_.kind == TailRule::Kind::Cycle) {
        bool all_free = true;
        for (const auto& b : tail_.blocks)
            if (b.size() != 1) all_free = false;
        if (all_free) tail_ = TailRule::free();
    }
}

Block BlockTree::block_at(std::size_t k) const {
    if (k < blocks_.size()) return blocks_[k];
    if (tail_.kind == TailRule::Kind::Free)
        return Block(Word::parse("0"), Word::parse("1"));
    return tail_.blocks[(k - blocks_.size()) % tail_.blocks.size()];
}

std::size_t BlockTree::split_height(std::size_t k) const {
    std::size_t h = stem_.size();
    std::size_t i = 0;
    for (; i < std::min(k, blocks_.size()); ++i) h += blocks_[i].size();
    if (i < k) {
        if (tail_.kind == TailRule::Kind::Free) {
            h += (k - i);
        } else {
            std::size_t cycle_len = 0;
            for (const auto& b : tail_.blocks) cycle_len += b.size();
            std::size_t rem = k - i;
            h += (rem / tail_.blocks.size()) * cycle_len;
            for (std::size_t j = 0; j < rem % tail_.blocks.size(); ++j)
                h += tail_.blocks[j].size();
        }
    }
    return h;
}

bool BlockTree::is_silver() const {
    for (const auto& b : blocks_)
        if (!b.silver()) return false;
    if (tail_.kind == TailRule::Kind::Cycle)
        for (const auto& b : tail_.blocks)
            if (!b.silver()) return false;
    return true;
}

bool BlockTree::member(const Word& w) const {
    // Stem segment.
    std::size_t take = std::min(w.size(), stem_.size());
    for (std::size_t i = 0; i < take; ++i)
        if (w[i] != stem_[i]) return false;
    if (w.size() <= stem_.size()) return true;
    std::size_t pos = stem_.size();
    for (std::size_t k = 0;; ++k) {
        const Block* b;
        if (k < blocks_.size()) {
            b = &blocks_[k];
        } else if (tail_.kind == TailRule::Kind::Free) {
            // Free tail: every remaining coordinate splits.
            return true;
        } else {
            b = &tail_.blocks[(k - blocks_.size()) % tail_.blocks.size()];
        }
        // The first bit of the block selects the side.
        const Word& u = w[pos] ? b->one : b->zero;
        std::size_t seg = std::min(u.size(), w.size() - pos);
        for (std::size_t i = 0; i < seg; ++i)
            if (w[pos + i] != u[i]) return false;
        pos += seg;
        if (pos == w.size()) return true;
    }
}

Point BlockTree::branch(const Point& selector) const {
    // Unroll until both the selector and the block stream are periodic.
    std::size_t m = blocks_.size();
    std::size_t start = std::max(selector.prefix().size(), m);
    std::vector<std::uint8_t> pre(stem_.bits());
    for (std::size_t k = 0; k < start; ++k) {
        Block b = block_at(k);
        const Word& u = b.side(selector.at(k));
        pre.insert(pre.end(), u.bits().begin(), u.bits().end());
    }
    std::size_t cycle = tail_.kind == TailRule::Kind::Free ? 1 : tail_.blocks.size();
    std::size_t span = std::lcm(selector.period().size(), cycle);
    std::vector<std::uint8_t> per;
    for (std::size_t k = start; k < start + span; ++k) {
        Block b = block_at(k);
        const Word& u = b.side(selector.at(k));
        per.insert(per.end(), u.bits().begin(), u.bits().end());
    }
    return Point(Word(std::move(pre)), Word(std::move(per)));
}

std::vector<Word> BlockTree::nodes_at(std::size_t depth, std::size_t max_nodes) const {
    std::vector<Word> frontier;
    if (depth <= stem_.size()) return {stem_.prefix(depth)};
    frontier.push_back(stem_);
    for (std::size_t k = 0;; ++k) {
        std::size_t h = frontier.front().size();
        if (h >= depth) break;
        Block b = block_at(k);
        std::vector<Word> next;
        next.reserve(frontier.size() * 2);
        if (frontier.size() * 2 > max_nodes)
            throw BudgetExceeded("BlockTree::nodes_at: too many nodes");
        std::size_t seg = std::min(b.size(), depth - h);
        for (const auto& w : frontier) {
            next.push_back(w.concat(b.zero.prefix(seg)));
            next.push_back(w.concat(b.one.prefix(seg)));
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    return frontier;
}

std::function<bool(const Word&)> BlockTree::oracle() const {
    BlockTree copy = *this;
    return [copy](const Word& w) { return copy.member(w); };
}

bool SilverPattern::is_split(std::size_t c) const {
    if (c >= height()) return tail_free;
    return std::binary_search(splits.begin(), splits.end(), c);
}

Word SilverPattern::fixed_completion(const Word& v) const {
    std::vector<std::uint8_t> out(v.bits());
    for (std::size_t j = v.size(); j < height(); ++j)
        out.push_back(is_split(j) ? 0 : bits[j]);
    return Word(std::move(out));
}

SilverPattern SilverPattern::from_tree(const BlockTree& p, std::size_t height) {
    if (!p.is_silver()) throw PreconditionError("SilverPattern: tree is not Silver");
    SilverPattern sp;
    sp.bits.assign(p.stem().bits().begin(), p.stem().bits().end());
    std::size_t k = 0;
    while (sp.bits.size() < height) {
        Block b = p.block_at(k);
        sp.splits.push_back(sp.bits.size());
        sp.bits.push_back(0);
        for (std::size_t i = 1; i < b.size(); ++i) sp.bits.push_back(b.zero[i]);
        ++k;
    }
    bool overshoot = sp.bits.size() > height;
    if (overshoot) sp.bits.resize(height);
    sp.tail_free = !overshoot && p.tail().kind == TailRule::Kind::Free &&
                   k >= p.explicit_blocks().size();
    return sp;
}

BlockTree SilverPattern::to_tree() const {
    if (splits.empty()) {
        if (!tail_free)
            throw PreconditionError("SilverPattern::to_tree: no splits and no free tail");
        return BlockTree(Word(bits), {}, TailRule::free());
    }
    Word all(bits);
    Word stem = all.prefix(splits[0]);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        std::size_t from = splits[i] + 1;
        std::size_t to = i + 1 < splits.size() ? splits[i + 1] : height();
        Word seg = all.range(from, to);
        blocks.emplace_back(Word::parse("0").concat(seg), Word::parse("1").concat(seg));
    }
    return BlockTree(stem, std::move(blocks), TailRule::free());
}

bool LazyTree::perfect_to(std::size_t depth, std::size_t bound) const {
    // BFS from the root; every reachable node within `depth` must have a splitting
    // extension no longer than `bound`.
    std::deque<Word> queue{Word()};
    if (!member_(Word())) return false;
    while (!queue.empty()) {
        Word w = queue.front();
        queue.pop_front();
        // Find a splitting extension of w.
        std::deque<Word> search{w};
        bool found = false;
        while (!search.empty() && !found) {
            Word x = search.front();
            search.pop_front();
            if (x.size() > bound) break;
            Word x0 = x.concat(Word::parse("0"));
            Word x1 = x.concat(Word::parse("1"));
            bool m0 = member_(x0), m1 = member_(x1);
            if (m0 && m1)
                found = true;
            else {
                if (m0) search.push_back(x0);
                if (m1) search.push_back(x1);
            }
        }
        if (!found) return false;
        if (w.size() < depth) {
            Word w0 = w.concat(Word::parse("0"));
            Word w1 = w.concat(Word::parse("1"));
            if (member_(w0)) queue.push_back(w0);
            if (member_(w1)) queue.push_back(w1);
        }
    }
    return true;
}

Word sigma_star(const BlockTree& p, const Word& sigma, std::size_t bound) {
    Word node = p.stem();
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        node = node.concat(p.block_at(k).side(sigma[k]));
        if (node.size() > bound) throw BudgetExceeded("sigma_star: bound exceeded");
    }
    return node;
}

namespace {

// Minimal (length-lex) splitting node of the oracle tree extending `from`.
std::optional<Word> min_splitting_node(const LazyTree& p, const Word& from, std::size_t bound) {
    std::deque<Word> queue{from};
    while (!queue.empty()) {
        Word x = queue.front();
        queue.pop_front();
        if (x.size() > bound) return std::nullopt;
        Word x0 = x.concat(Word::parse("0"));
        Word x1 = x.concat(Word::parse("1"));
        bool m0 = p.member(x0), m1 = p.member(x1);
        if (m0 && m1) return x;
        if (m0) queue.push_back(x0);
        if (m1) queue.push_back(x1);
        if (x.size() + 1 > bound) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Word sigma_star(const LazyTree& p, const Word& sigma, std::size_t bound) {
    if (!p.member(Word())) throw PreconditionError("sigma_star: empty tree");
    auto stem = min_splitting_node(p, Word(), bound);
    if (!stem) throw BudgetExceeded("sigma_star: stem not found within bound");
    Word node = *stem;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        Word child = node.concat(sigma[k] ? Word::parse("1") : Word::parse("0"));
        if (!p.member(child)) throw PreconditionError("sigma_star: selector leaves the tree");
        auto next = min_splitting_node(p, child, bound);
        if (!next) throw BudgetExceeded("sigma_star: splitting node not found within bound");
        node = *next;
    }
    return node;
}

std::vector<Word> splitting_level(const BlockTree& p, std::size_t n, std::size_t bound) {
    if (n > 20) throw BudgetExceeded("splitting_level: level too deep");
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        out.push_back(sigma_star(p, Word::from_value(v, n), bound));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> splitting_level(const LazyTree& p, std::size_t n, std::size_t bound) {
    if (n > 16) throw BudgetExceeded("splitting_level: level too deep");
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        out.push_back(sigma_star(p, Word::from_value(v, n), bound));
    std::sort(out.begin(), out.end());
    return out;
}

BlockTree restrict_tree(const BlockTree& p, const Word& sigma, std::size_t bound) {
    Word new_stem = sigma_star(p, sigma, bound);
    std::vector<Block> blocks;
    for (std::size_t k = sigma.size(); k < p.explicit_blocks().size(); ++k)
        blocks.push_back(p.explicit_blocks()[k]);
    TailRule tail = p.tail();
    if (sigma.size() > p.explicit_blocks().size() && tail.kind == TailRule::Kind::Cycle) {
        // Rotate the cycle so block indexing stays aligned.
        std::size_t shift = (sigma.size() - p.explicit_blocks().size()) % tail.blocks.size();
        std::rotate(tail.blocks.begin(), tail.blocks.begin() + static_cast<long>(shift),
                    tail.blocks.end());
    }
    return BlockTree(new_stem, std::move(blocks), std::move(tail));
}

LazyTree restrict_tree(const LazyTree& p, const Word& sigma, std::size_t bound) {
    Word star = sigma_star(p, sigma, bound);
    auto member = [p, star](const Word& w) {
        if (!p.member(w)) return false;
        return w.is_prefix_of(star) || star.is_prefix_of(w);
    };
    return LazyTree(member);
}

bool leq_n(const BlockTree& q, const BlockTree& p, std::size_t n, std::size_t extra_depth,
           std::size_t bound) {
    if (q.is_silver() && p.is_silver()) {
        // O(depth) comparison on the pattern form. L_n(q) = L_n(p) iff the first n
        // split positions and the fixed bits below the n-th split agree; inclusion
        // iff every fixed coordinate of p is fixed in q with the same bit.
        std::size_t hq = q.split_height(n), hp = p.split_height(n);
        if (hq != hp) return false;
        std::size_t horizon = std::max({hq + extra_depth,
                                        q.split_height(q.explicit_blocks().size() + 1),
                                        p.split_height(p.explicit_blocks().size() + 1)});
        horizon = std::min(horizon, bound);
        SilverPattern sq = SilverPattern::from_tree(q, horizon);
        SilverPattern sp = SilverPattern::from_tree(p, horizon);
        for (std::size_t j = 0; j < hq; ++j) {
            if (sq.is_split(j) != sp.is_split(j)) return false;
            if (!sq.is_split(j) && sq.bits[j] != sp.bits[j]) return false;
        }
        for (std::size_t j = 0; j < horizon; ++j) {
            if (sp.is_split(j)) continue;
            if (sq.is_split(j) || sq.bits[j] != sp.bits[j]) return false;
        }
        if (!sp.tail_free && sq.tail_free) return false;
        return true;
    }
    auto lq = splitting_level(q, n, bound);
    auto lp = splitting_level(p, n, bound);
    if (lq != lp) return false;
    std::size_t depth = extra_depth;
    for (const auto& w : lq) depth = std::max(depth, w.size() + extra_depth);
    for (std::size_t d = 0; d <= depth; ++d)
        for (const auto& w : q.nodes_at(d, bound))
            if (!p.member(w)) return false;
    return true;
}

BlockTree amalgamate(const BlockTree& p, const Word& sigma, const BlockTree& r,
                     std::size_t bound) {
    Word star = sigma_star(p, sigma, bound);
    if (!star.is_prefix_of(r.stem()))
        throw PreconditionError("amalgamate: r does not extend the restriction");
    // r below p * sigma, checked to the depth of r's presentation.
    std::size_t check = std::min<std::size_t>(r.stem().size() + 8, bound);
    for (std::size_t d = star.size(); d <= check; ++d)
        for (const auto& w : r.nodes_at(d, bound))
            if (!p.member(w))
                throw PreconditionError("amalgamate: r is not below the restriction");

    if (sigma.empty()) return r;  // the whole tree above the stem is replaced

    // The stem extension above sigma* is a forced continuation: both sides of the
    // level block carry it (valid on the mirror side by the E0 law of p), so no
    // split appears along delta and the level structure below |sigma| is intact.
    Word delta = r.stem().suffix(star.size());
    std::vector<Block> blocks;
    for (std::size_t k = 0; k + 1 < sigma.size(); ++k) blocks.push_back(p.block_at(k));
    Block level = p.block_at(sigma.size() - 1);
    blocks.emplace_back(level.zero.concat(delta), level.one.concat(delta));
    for (const auto& b : r.explicit_blocks()) blocks.push_back(b);
    return BlockTree(p.stem(), std::move(blocks), r.tail());
}

bool branches_subset(const BlockTree& p, const ClopenSet& a, std::size_t bound) {
    for (const auto& w : p.nodes_at(a.depth(), bound))
        if (!a.contains_word(w)) return false;
    return true;
}

}  // namespace tf
