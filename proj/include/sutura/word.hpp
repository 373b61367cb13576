#pragma once

#include <ostream>

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sutura {

// Word over {-,+}; symbol i sits at bit (len-1-i), '+' = 1, so equal-length
// words compare lexicographically (- before +) as plain integers.
class Word {
public:
    Word() = default;
    static Word parse(std::string_view s);
    static Word repeat(bool plus, int count);

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }
    bool plus(int i) const { return (bits_ >> (len_ - 1 - i)) & 1u; }
    bool minus(int i) const { return !plus(i); }
    int plus_count() const;
    int minus_count() const { return len_ - plus_count(); }
    int euler() const { return plus_count() - minus_count(); }
    std::uint64_t bits() const { return bits_; }

    // position of the k'th (1-based) sign of the given kind, -1 if absent
    int position(bool plus_sign, int k) const;

    Word prepend(bool plus_sign) const { return insert(0, plus_sign); }
    Word append(bool plus_sign) const { return insert(len_, plus_sign); }
    Word insert(int i, bool plus_sign) const;
    Word erase(int i) const;
    Word concat(const Word& o) const;
    Word reversed() const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.len_ != b.len_) return a.len_ <=> b.len_;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    int len_ = 0;
};

Word operator""_w(const char* s, std::size_t n);

std::strong_ordering lex_compare(const Word& a, const Word& b);
bool partial_leq(const Word& a, const Word& b);
bool partial_leq_prefix(const Word& a, const Word& b);

std::vector<Word> all_words(int n_minus, int n_plus);
std::vector<Word> all_words(int n);

long long binomial(int n, int k);
long long catalan(int n);
// number of chord diagrams with n chords and euler class e
long long narayana(int chords, int e);
long long narayana_recursive(int chords, int e);

std::vector<std::pair<Word, Word>> comparable_pairs(int n_minus, int n_plus);

// f on {1..n+1} stored 0-based: f[i-1] = f(i)
std::vector<int> pair_to_monotone(const Word& lo, const Word& hi);
std::pair<Word, Word> monotone_to_pair(const std::vector<int>& f);

struct WordInterval {
    Word lower;
    Word upper;
    std::vector<Word> members;
};

WordInterval interval(const Word& lo, const Word& hi);

// forwards and backwards generalised elementary moves
Word forward_move(const Word& w, int i, int j);
Word backward_move(const Word& w, int i, int j);
bool forward_move_defined(const Word& w, int i, int j);

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << (w.empty() ? "()" : w.str()); }

}  // namespace sutura

template <>
struct std::hash<sutura::Word> {
    std::size_t operator()(const sutura::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 131u + static_cast<std::uint64_t>(w.size()));
    }
};
