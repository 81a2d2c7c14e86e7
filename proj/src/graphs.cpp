#include "treeforce/graphs.hpp"

#include <algorithm>

namespace tf {

WordMap WordMap::identity() { return WordMap(Kind::Identity, Word(), true); }
WordMap WordMap::xor_mask(Word t) { return WordMap(Kind::XorMask, std::move(t), true); }
WordMap WordMap::prepend(Word u) { return WordMap(Kind::Prepend, std::move(u), true); }
WordMap WordMap::constant(Word w) { return WordMap(Kind::Constant, std::move(w), false); }

WordMap WordMap::table(std::vector<std::pair<Word, Word>> entries, bool injective) {
    WordMap m(Kind::Table, Word(), injective);
    m.table_ = std::move(entries);
    for (const auto& [a, fa] : m.table_)
        for (const auto& [b, fb] : m.table_)
            if (a.is_prefix_of(b) && !fa.is_prefix_of(fb))
                throw PreconditionError("WordMap::table: not monotone");
    return m;
}

Word WordMap::apply(const Word& w) const {
    switch (kind_) {
        case Kind::Identity: return w;
        case Kind::XorMask: {
            // Acts coordinatewise; the mask does not lengthen the word.
            Word out = w;
            for (std::size_t i = 0; i < std::min(w.size(), param_.size()); ++i)
                out.set(i, w[i] ^ param_[i]);
            return out;
        }
        case Kind::Prepend: return param_.concat(w);
        case Kind::Constant: return param_.prefix(std::min(param_.size(), w.size()));
        case Kind::Table: {
            const Word* best = nullptr;
            std::size_t best_len = 0;
            for (const auto& [a, fa] : table_)
                if (a.is_prefix_of(w) && (best == nullptr || a.size() >= best_len)) {
                    best = &fa;
                    best_len = a.size();
                }
            if (!best) throw PreconditionError("WordMap::table: word outside domain");
            return *best;
        }
    }
    throw PreconditionError("WordMap::apply: bad kind");
}

Point WordMap::apply(const Point& x) const {
    switch (kind_) {
        case Kind::Identity: return x;
        case Kind::XorMask: return xor_point(x, param_);
        case Kind::Prepend: return Point(param_.concat(x.prefix()), x.period());
        case Kind::Constant: return Point::word_then_zeros(param_);
        case Kind::Table: throw PreconditionError("WordMap: table maps have no point action");
    }
    throw PreconditionError("WordMap::apply: bad kind");
}

ClopenGraph::ClopenGraph(std::size_t depth, std::vector<std::pair<Word, Word>> boxes)
    : depth_(depth), boxes_(std::move(boxes)) {
    for (auto& [u, v] : boxes_) {
        if (u.size() != depth_ || v.size() != depth_)
            throw PreconditionError("ClopenGraph: box word length != depth");
        if (u == v) throw PreconditionError("ClopenGraph: box with equal sides");
        if (v < u) std::swap(u, v);
    }
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

std::optional<std::size_t> ClopenGraph::box_of(const Word& a, const Word& b) const {
    if (a.size() < depth_ || b.size() < depth_)
        throw PreconditionError("ClopenGraph::box_of: words shorter than depth");
    Word pa = a.prefix(depth_), pb = b.prefix(depth_);
    if (pb < pa) std::swap(pa, pb);
    auto it = std::lower_bound(boxes_.begin(), boxes_.end(), std::make_pair(pa, pb));
    if (it != boxes_.end() && *it == std::make_pair(pa, pb))
        return static_cast<std::size_t>(it - boxes_.begin());
    return std::nullopt;
}

GraphSpec GraphSpec::g0(DenseSequence seq) {
    GraphSpec g;
    g.kind_ = GraphKind::G0;
    g.dense_ = std::move(seq);
    return g;
}
GraphSpec GraphSpec::g1() {
    GraphSpec g;
    g.kind_ = GraphKind::G1;
    return g;
}
GraphSpec GraphSpec::e0() {
    GraphSpec g;
    g.kind_ = GraphKind::E0;
    return g;
}
GraphSpec GraphSpec::boxes(ClopenGraph bg) {
    GraphSpec g;
    g.kind_ = GraphKind::Boxes;
    g.boxes_ = std::move(bg);
    return g;
}
GraphSpec GraphSpec::pullback_of(WordMap f, GraphSpec inner) {
    GraphSpec g;
    g.kind_ = GraphKind::Pullback;
    g.map_ = std::make_shared<WordMap>(std::move(f));
    g.inner_ = std::make_shared<GraphSpec>(std::move(inner));
    return g;
}

const ClopenGraph& GraphSpec::box_graph() const {
    if (kind_ != GraphKind::Boxes) throw PreconditionError("GraphSpec: not a box graph");
    return boxes_;
}
const WordMap& GraphSpec::map() const {
    if (kind_ != GraphKind::Pullback) throw PreconditionError("GraphSpec: not a pull-back");
    return *map_;
}
const GraphSpec& GraphSpec::inner() const {
    if (kind_ != GraphKind::Pullback) throw PreconditionError("GraphSpec: not a pull-back");
    return *inner_;
}

EdgeCertificate GraphSpec::edge(const Point& x, const Point& y) const {
    EdgeCertificate c;
    switch (kind_) {
        case GraphKind::G0:
        case GraphKind::G1: {
            Point d = xor_point(x, y);
            if (!d.is_eventually_zero()) return c;
            auto ones = d.ones();
            if (ones.size() != 1) return c;
            std::uint64_t k = ones[0];
            if (kind_ == GraphKind::G1) {
                c.edge = true;
                c.coordinate = k;
                return c;
            }
            if (k > (1u << 20)) throw BudgetExceeded("edge(G0): coordinate too large");
            if (x.prefix_word(static_cast<std::size_t>(k)) != dense_.at(k)) {
                c.detail = "single difference but prefix misses the dense word";
                return c;
            }
            c.edge = true;
            c.coordinate = k;
            return c;
        }
        case GraphKind::E0: {
            if (x == y) return c;
            Point d = xor_point(x, y);
            if (!d.is_eventually_zero()) return c;
            auto ones = d.ones();
            c.edge = true;
            c.coordinate = ones.empty() ? 0 : ones.back() + 1;  // agreement index
            return c;
        }
        case GraphKind::Boxes: {
            Word a = x.prefix_word(boxes_.depth());
            Word b = y.prefix_word(boxes_.depth());
            auto box = boxes_.box_of(a, b);
            if (box) {
                c.edge = true;
                c.box = *box;
            }
            return c;
        }
        case GraphKind::Pullback: return inner_->edge(map_->apply(x), map_->apply(y));
    }
    return c;
}

GraphSpec pullback(const WordMap& f, const GraphSpec& g) {
    if (!f.injective()) throw PreconditionError("pullback: map not flagged injective");
    return GraphSpec::pullback_of(f, g);
}

ClopenGraph clopen_pullback(const WordMap& f, const ClopenGraph& g) {
    if (!f.injective()) throw PreconditionError("clopen_pullback: map not flagged injective");
    switch (f.kind()) {
        case WordMap::Kind::Identity: return g;
        case WordMap::Kind::XorMask: {
            std::vector<std::pair<Word, Word>> boxes;
            for (const auto& [u, v] : g.boxes()) {
                Word a = u, b = v;
                for (std::size_t i = 0; i < std::min(a.size(), f.parameter().size()); ++i) {
                    a.set(i, a[i] ^ f.parameter()[i]);
                    b.set(i, b[i] ^ f.parameter()[i]);
                }
                if (a != b) boxes.emplace_back(a, b);
            }
            return ClopenGraph(g.depth(), std::move(boxes));
        }
        case WordMap::Kind::Prepend: {
            const Word& u0 = f.parameter();
            if (u0.size() > g.depth())
                throw PreconditionError("clopen_pullback: prefix deeper than graph");
            std::size_t d = g.depth() - u0.size();
            std::vector<std::pair<Word, Word>> boxes;
            for (const auto& [u, v] : g.boxes()) {
                if (!u0.is_prefix_of(u) || !u0.is_prefix_of(v)) continue;
                Word a = u.suffix(u0.size()), b = v.suffix(u0.size());
                if (a != b) boxes.emplace_back(a, b);
            }
            return ClopenGraph(d, std::move(boxes));
        }
        default: throw PreconditionError("clopen_pullback: unsupported map kind");
    }
}

IndependenceWitness clopen_independence_witness(const GraphSpec& g, const ClopenSet& a,
                                                std::uint64_t probe_depth) {
    if (a.is_empty()) throw EmptyInputError("clopen_independence_witness: empty set");
    if (probe_depth < a.depth())
        throw PreconditionError("clopen_independence_witness: probe below set depth");
    IndependenceWitness w;
    const Word u = a.words().front();  // lex-least member cylinder
    switch (g.kind()) {
        case GraphKind::G0: {
            std::uint64_t k = least_dense_index_extending(u, u.size());
            if (k > (std::uint64_t{1} << 20))
                throw BudgetExceeded("clopen_independence_witness: dense index out of range");
            Word sk = g.dense().at(k);
            w.x = Point::word_then_zeros(sk.concat(Word::parse("0")));
            w.y = Point::word_then_zeros(sk.concat(Word::parse("1")));
            break;
        }
        case GraphKind::G1:
        case GraphKind::E0: {
            w.x = Point::word_then_zeros(u.concat(Word::parse("0")));
            w.y = Point::word_then_zeros(u.concat(Word::parse("1")));
            break;
        }
        case GraphKind::Boxes: {
            std::size_t d = std::max<std::size_t>(a.depth(), g.box_graph().depth());
            if (d > probe_depth) throw BudgetExceeded("clopen_independence_witness: probe");
            ClopenSet ra = refine(a, d);
            for (const auto& p : ra.words())
                for (const auto& q : ra.words()) {
                    if (!g.box_graph().pair_in_boxes(p, q)) continue;
                    w.x = Point::word_then_zeros(p);
                    w.y = Point::word_then_zeros(q);
                    w.cert = g.edge(w.x, w.y);
                    if (w.cert.edge) {
                        w.found = true;
                        return w;
                    }
                }
            w.note = "none found";
            return w;
        }
        case GraphKind::Pullback:
            throw PreconditionError("clopen_independence_witness: pull-back unsupported");
    }
    w.cert = g.edge(w.x, w.y);
    w.found = w.cert.edge;
    if (!w.found) w.note = "constructed pair failed verification";
    return w;
}

std::vector<Point> enumerate_points(std::size_t size) {
    std::vector<Point> out;
    for (std::size_t plen = 0; plen <= size; ++plen) {
        for (std::size_t qlen = 1; plen + qlen <= size; ++qlen) {
            for (std::uint64_t pv = 0; pv < (std::uint64_t{1} << plen); ++pv) {
                for (std::uint64_t qv = 0; qv < (std::uint64_t{1} << qlen); ++qv) {
                    Point pt(Word::from_value(pv, plen), Word::from_value(qv, qlen));
                    out.push_back(pt);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HomomorphismReport check_homomorphism(const WordMap& phi, const GraphSpec& g, const GraphSpec& h,
                                      std::size_t depth) {
    if (depth > 10) throw BudgetExceeded("check_homomorphism: depth too large");
    auto pts = enumerate_points(depth);
    HomomorphismReport rep;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!g.edge(pts[i], pts[j]).edge) continue;
            if (!h.edge(phi.apply(pts[i]), phi.apply(pts[j])).edge) {
                rep.holds = false;
                rep.x = pts[i];
                rep.y = pts[j];
                rep.detail = "edge not preserved";
                return rep;
            }
        }
    return rep;
}

RamseyOutcome ramsey_find(const std::vector<Point>& points, const GraphSpec& g) {
    const std::size_t n = points.size();
    if (n != 18) throw PreconditionError("ramsey_find: expected 18 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw PreconditionError("ramsey_find: duplicate points");

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = g.edge(points[i], points[j]).edge;

    RamseyOutcome out;
    // Cyclic orderings of {a,b,c,d} up to rotation/reflection.
    const int orders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    const std::size_t q[4] = {a, b, c, d};
                    for (const auto& ord : orders) {
                        bool cyc = true;
                        for (int e = 0; e < 4; ++e)
                            if (!adj[q[ord[e]]][q[ord[(e + 1) % 4]]]) {
                                cyc = false;
                                break;
                            }
                        if (cyc) {
                            out.kind = RamseyOutcome::Kind::FourCycle;
                            for (int e = 0; e < 4; ++e) out.points.push_back(points[q[ord[e]]]);
                            return out;
                        }
                    }
                    if (!adj[a][b] && !adj[a][c] && !adj[a][d] && !adj[b][c] && !adj[b][d] &&
                        !adj[c][d]) {
                        out.kind = RamseyOutcome::Kind::IndependentSet;
                        out.points = {points[a], points[b], points[c], points[d]};
                        return out;
                    }
                }
    return out;
}

}  // namespace tf
