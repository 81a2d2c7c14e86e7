#include "treeforce/word.hpp"

#include <algorithm>
#include <numeric>

namespace tf {

Word Word::parse(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else
            throw ParseError("Word::parse: expected '0'/'1', got '" + std::string(1, c) + "'");
    }
    return Word(std::move(bits));
}

Word Word::from_value(std::uint64_t value, std::size_t length) {
    if (length > 62) throw PreconditionError("Word::from_value: length > 62");
    std::vector<std::uint8_t> bits(length, 0);
    for (std::size_t i = 0; i < length; ++i)
        bits[length - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1);
    return Word(std::move(bits));
}

Word Word::prefix(std::size_t n) const {
    if (n > size()) throw PreconditionError("Word::prefix: out of range");
    return Word(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<long>(n)));
}

Word Word::range(std::size_t from, std::size_t to) const {
    if (from > to || to > size()) throw PreconditionError("Word::range: out of range");
    return Word(std::vector<std::uint8_t>(bits_.begin() + static_cast<long>(from),
                                          bits_.begin() + static_cast<long>(to)));
}

Word Word::concat(const Word& other) const {
    std::vector<std::uint8_t> bits = bits_;
    bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
    return Word(std::move(bits));
}

Word Word::repeated(std::size_t times) const {
    std::vector<std::uint8_t> bits;
    bits.reserve(size() * times);
    for (std::size_t i = 0; i < times; ++i)
        bits.insert(bits.end(), bits_.begin(), bits_.end());
    return Word(std::move(bits));
}

bool Word::is_prefix_of(const Word& other) const {
    if (size() > other.size()) return false;
    return std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::size_t Word::common_prefix_length(const Word& other) const {
    std::size_t n = std::min(size(), other.size()), i = 0;
    while (i < n && bits_[i] == other.bits_[i]) ++i;
    return i;
}

std::size_t Word::popcount() const {
    return static_cast<std::size_t>(std::accumulate(bits_.begin(), bits_.end(), std::size_t{0}));
}

std::size_t Word::one_support() const {
    for (std::size_t i = size(); i > 0; --i)
        if (bits_[i - 1]) return i;
    return 0;
}

std::uint64_t Word::value() const {
    if (size() > 62) throw BudgetExceeded("Word::value: word longer than 62 bits");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
}

std::string Word::str() const {
    std::string s;
    s.reserve(size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

bool Word::operator<(const Word& o) const {
    if (size() != o.size()) return size() < o.size();
    return bits_ < o.bits_;
}

Word xor_padded(const Word& a, const Word& b) {
    std::size_t n = std::max(a.size(), b.size());
    std::vector<std::uint8_t> bits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t x = i < a.size() ? a[i] : 0;
        std::uint8_t y = i < b.size() ? b[i] : 0;
        bits[i] = x ^ y;
    }
    return Word(std::move(bits));
}

Word one_at(std::size_t n) {
    std::vector<std::uint8_t> bits(n + 1, 0);
    bits[n] = 1;
    return Word(std::move(bits));
}

std::uint64_t length_lex_index(const Word& w) {
    if (w.size() > 62) throw BudgetExceeded("length_lex_index: word longer than 62 bits");
    return ((std::uint64_t{1} << w.size()) - 1) + w.value();
}

Word length_lex_word(std::uint64_t index) {
    // index + 1 written in binary is 1 followed by the word.
    std::uint64_t v = index + 1;
    std::size_t len = 0;
    while ((std::uint64_t{1} << (len + 1)) <= v) ++len;
    return Word::from_value(v - (std::uint64_t{1} << len), len);
}

Point::Point(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw PreconditionError("Point: period must be nonempty");
    canonicalize();
}

void Point::canonicalize() {
    // Primitive period root.
    for (std::size_t d = 1; d < period_.size(); ++d) {
        if (period_.size() % d != 0) continue;
        if (period_.prefix(d).repeated(period_.size() / d) == period_) {
            period_ = period_.prefix(d);
            break;
        }
    }
    // Absorb a matching prefix tail into the periodic part.
    while (!prefix_.empty() && prefix_[prefix_.size() - 1] == period_[period_.size() - 1]) {
        prefix_.pop_back();
        std::vector<std::uint8_t> rot;
        rot.reserve(period_.size());
        rot.push_back(period_[period_.size() - 1]);
        for (std::size_t i = 0; i + 1 < period_.size(); ++i) rot.push_back(period_[i]);
        period_ = Word(std::move(rot));
    }
}

std::uint8_t Point::at(std::uint64_t i) const {
    if (i < prefix_.size()) return prefix_[static_cast<std::size_t>(i)];
    return period_[static_cast<std::size_t>((i - prefix_.size()) % period_.size())];
}

Word Point::prefix_word(std::size_t n) const {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = at(i);
    return Word(std::move(bits));
}

bool Point::operator<(const Point& o) const {
    if (prefix_ != o.prefix_) return prefix_ < o.prefix_;
    return period_ < o.period_;
}

bool Point::is_eventually_zero() const { return period_ == Word::parse("0"); }

std::vector<std::uint64_t> Point::ones() const {
    if (!is_eventually_zero())
        throw PreconditionError("Point::ones: point is not eventually zero");
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < prefix_.size(); ++i)
        if (prefix_[i]) out.push_back(i);
    return out;
}

std::string Point::str() const { return prefix_.str() + "(" + period_.str() + ")*"; }

Point xor_point(const Point& x, const Word& t) {
    std::size_t n = std::max<std::size_t>(x.prefix().size(), t.size());
    Word pre = xor_padded(x.prefix_word(n), t);
    // Keep the period in phase with the lengthened prefix.
    std::size_t k = (n - x.prefix().size()) % x.period().size();
    Word rot = x.period().suffix(k).concat(x.period().prefix(k));
    return Point(pre, rot);
}

namespace {
std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }
}  // namespace

Point xor_point(const Point& x, const Point& y) {
    std::uint64_t per = lcm64(x.period().size(), y.period().size());
    std::uint64_t pre = std::max(x.prefix().size(), y.prefix().size());
    if (per > (1u << 20) || pre > (1u << 20))
        throw BudgetExceeded("xor_point: period unroll too large");
    std::vector<std::uint8_t> p(static_cast<std::size_t>(pre));
    for (std::uint64_t i = 0; i < pre; ++i)
        p[static_cast<std::size_t>(i)] = x.at(i) ^ y.at(i);
    std::vector<std::uint8_t> q(static_cast<std::size_t>(per));
    for (std::uint64_t i = 0; i < per; ++i)
        q[static_cast<std::size_t>(i)] = x.at(pre + i) ^ y.at(pre + i);
    return Point(Word(std::move(p)), Word(std::move(q)));
}

Word DenseSequence::canonical_rule(std::uint64_t k) {
    Word e = length_lex_word(k);
    std::vector<std::uint8_t> bits(e.bits());
    if (bits.size() > k) throw PreconditionError("dense_seq: internal");
    bits.resize(static_cast<std::size_t>(k), 0);
    return Word(std::move(bits));
}

Word dense_seq(std::uint64_t k) { return DenseSequence::canonical_rule(k); }

std::uint64_t least_dense_index_extending(const Word& w, std::uint64_t lower_bound) {
    std::uint64_t bound = std::max<std::uint64_t>(lower_bound, w.size());
    if (w.one_support() > 62)
        throw BudgetExceeded("least_dense_index_extending: 1-support beyond 62");
    // Trimmed candidates: e_n = w restricted to m coordinates, m from the 1-support up.
    // Indices double with m, so a candidate past the bound appears within 62 steps.
    for (std::size_t m = w.one_support(); m <= std::min<std::size_t>(w.size(), 62); ++m) {
        std::uint64_t n = length_lex_index(w.prefix(m));
        if (n >= bound) return n;
    }
    if (w.size() > 62) throw BudgetExceeded("least_dense_index_extending: overflow");
    // Extensions e_n = w^frown z.
    for (std::size_t add = 1;; ++add) {
        if (w.size() + add > 62) throw BudgetExceeded("least_dense_index_extending: overflow");
        std::uint64_t base = ((std::uint64_t{1} << (w.size() + add)) - 1) + (w.value() << add);
        std::uint64_t top = base + ((std::uint64_t{1} << add) - 1);
        if (top >= bound) return std::max(base, bound);
    }
}

}  // namespace tf
