#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treeforce/errors.hpp"

namespace tf {

/// Finite binary word. Coordinates are indexed from 0; bit values are 0 or 1.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) { check(); }

    static Word zeros(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 0)); }
    static Word parse(const std::string& s);

    /// MSB-first value: parse("10").value() == 2.
    static Word from_value(std::uint64_t value, std::size_t length);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t at(std::size_t i) const { return bits_.at(i); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, std::uint8_t v) { bits_.at(i) = v ? 1 : 0; }
    void push_back(std::uint8_t v) { bits_.push_back(v ? 1 : 0); }
    void pop_back() { bits_.pop_back(); }

    Word prefix(std::size_t n) const;
    Word suffix(std::size_t from) const { return range(from, size()); }
    Word range(std::size_t from, std::size_t to) const;
    Word concat(const Word& other) const;
    Word repeated(std::size_t times) const;

    bool is_prefix_of(const Word& other) const;
    std::size_t common_prefix_length(const Word& other) const;

    std::size_t popcount() const;
    /// 1 + position of the last set bit; 0 for all-zero words.
    std::size_t one_support() const;

    /// MSB-first numeric value. Throws on words longer than 62 bits.
    std::uint64_t value() const;

    std::string str() const;

    bool operator==(const Word& o) const { return bits_ == o.bits_; }
    bool operator!=(const Word& o) const { return bits_ != o.bits_; }
    /// Length-lexicographic order (shorter first, then lex).
    bool operator<(const Word& o) const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

  private:
    void check() const {
        for (auto b : bits_)
            if (b > 1) throw PreconditionError("Word: bit out of range");
    }
    std::vector<std::uint8_t> bits_;
};

/// Coordinatewise sum mod 2; the shorter argument is zero-padded.
Word xor_padded(const Word& a, const Word& b);

/// The word 1_n of length n+1: zeros except coordinate n.
Word one_at(std::size_t n);

/// Index of w in the length-lexicographic enumeration e_0 = (), e_1 = 0, e_2 = 1, e_3 = 00, ...
std::uint64_t length_lex_index(const Word& w);

/// Inverse of length_lex_index.
Word length_lex_word(std::uint64_t index);

/// An eventually periodic element of Cantor space, in canonical form
/// (primitive period, shortest prefix).
class Point {
  public:
    Point() : period_(Word::parse("0")) {}
    Point(Word prefix, Word period);

    static Point parse(const std::string& prefix, const std::string& period) {
        return Point(Word::parse(prefix), Word::parse(period));
    }
    /// The branch w^frown 0 0 0 ...
    static Point word_then_zeros(const Word& w) { return Point(w, Word::parse("0")); }

    std::uint8_t at(std::uint64_t i) const;
    Word prefix_word(std::size_t n) const;

    const Word& prefix() const { return prefix_; }
    const Word& period() const { return period_; }

    bool operator==(const Point& o) const { return prefix_ == o.prefix_ && period_ == o.period_; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const;

    bool is_eventually_zero() const;
    /// Positions where the point is 1, provided it is eventually zero.
    std::vector<std::uint64_t> ones() const;

    std::string str() const;

  private:
    void canonicalize();
    Word prefix_;
    Word period_;
};

Point xor_point(const Point& x, const Word& t);
Point xor_point(const Point& x, const Point& y);

/// Dense sequence (s_k): |s_k| = k and every word has an extension on the
/// sequence. The canonical rule pads the length-lex enumeration with zeros.
class DenseSequence {
  public:
    DenseSequence() : rule_(canonical_rule) {}
    explicit DenseSequence(std::function<Word(std::uint64_t)> rule) : rule_(std::move(rule)) {}

    Word at(std::uint64_t k) const { return rule_(k); }

    static Word canonical_rule(std::uint64_t k);

  private:
    std::function<Word(std::uint64_t)> rule_;
};

Word dense_seq(std::uint64_t k);

/// Least n >= lower_bound with s_n extending w, for the canonical sequence.
/// Closed form; no scan over n.
std::uint64_t least_dense_index_extending(const Word& w, std::uint64_t lower_bound);

}  // namespace tf
