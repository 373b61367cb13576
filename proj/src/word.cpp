#include "sutura/word.hpp"

#include "sutura/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace sutura {

Word Word::parse(std::string_view s) {
    Word w;
    for (char c : s) {
        if (c != '-' && c != '+') throw Error(ErrorKind::ParseError, "word symbols are '-' and '+'");
        if (w.len_ >= 63) throw Error(ErrorKind::ParseError, "word too long");
        w.bits_ = (w.bits_ << 1) | (c == '+' ? 1u : 0u);
        ++w.len_;
    }
    return w;
}

Word operator""_w(const char* s, std::size_t n) { return Word::parse(std::string_view(s, n)); }

Word Word::repeat(bool plus_sign, int count) {
    Word w;
    for (int i = 0; i < count; ++i) w = w.append(plus_sign);
    return w;
}

int Word::plus_count() const { return std::popcount(bits_); }

int Word::position(bool plus_sign, int k) const {
    int seen = 0;
    for (int i = 0; i < len_; ++i)
        if (plus(i) == plus_sign && ++seen == k) return i;
    return -1;
}

Word Word::insert(int i, bool plus_sign) const {
    Word w;
    for (int p = 0; p <= len_; ++p) {
        if (p == i) w.bits_ = (w.bits_ << 1) | (plus_sign ? 1u : 0u);
        if (p < len_) w.bits_ = (w.bits_ << 1) | (plus(p) ? 1u : 0u);
    }
    w.len_ = len_ + 1;
    return w;
}

Word Word::erase(int i) const {
    Word w;
    for (int p = 0; p < len_; ++p)
        if (p != i) w.bits_ = (w.bits_ << 1) | (plus(p) ? 1u : 0u);
    w.len_ = len_ - 1;
    return w;
}

Word Word::concat(const Word& o) const {
    Word w;
    w.bits_ = (bits_ << o.len_) | o.bits_;
    w.len_ = len_ + o.len_;
    return w;
}

Word Word::reversed() const {
    Word w;
    for (int p = len_ - 1; p >= 0; --p) w.bits_ = (w.bits_ << 1) | (plus(p) ? 1u : 0u);
    w.len_ = len_;
    return w;
}

std::string Word::str() const {
    std::string s;
    for (int i = 0; i < len_; ++i) s += plus(i) ? '+' : '-';
    return s;
}

std::strong_ordering lex_compare(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, a.str() + " vs " + b.str());
    return a.bits() <=> b.bits();
}

namespace {
void same_grading(const Word& a, const Word& b) {
    if (a.size() != b.size() || a.plus_count() != b.plus_count())
        throw Error(ErrorKind::GradingMismatch, a.str() + " vs " + b.str());
}
}  // namespace

bool partial_leq(const Word& a, const Word& b) {
    same_grading(a, b);
    for (int k = 1; k <= a.minus_count(); ++k)
        if (a.position(false, k) > b.position(false, k)) return false;
    return true;
}

bool partial_leq_prefix(const Word& a, const Word& b) {
    same_grading(a, b);
    int sa = 0, sb = 0;
    for (int i = 0; i < a.size(); ++i) {
        sa += a.plus(i) ? 1 : -1;
        sb += b.plus(i) ? 1 : -1;
        if (sb < sa) return false;
    }
    return true;
}

std::vector<Word> all_words(int n_minus, int n_plus) {
    std::vector<Word> out;
    const int n = n_minus + n_plus;
    if (n_minus < 0 || n_plus < 0) return out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (std::popcount(bits) != n_plus) continue;
        Word w;
        for (int i = n - 1; i >= 0; --i) w = w.append((bits >> i) & 1u);
        out.push_back(w);
    }
    return out;
}

std::vector<Word> all_words(int n) {
    std::vector<Word> out;
    for (int k = 0; k <= n; ++k) {
        auto part = all_words(n - k, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long catalan(int n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

long long narayana(int chords, int e) {
    const int n = chords - 1;
    if (chords < 1 || e > n || e < -n || (e + n) % 2 != 0) return 0;
    const int k = (e + n) / 2;
    return binomial(n + 1, k + 1) * binomial(n + 1, k) / (n + 1);
}

long long narayana_recursive(int chords, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, long long> memo;
    if (chords < 1) return 0;
    if (chords == 1) return e == 0 ? 1 : 0;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({chords, e}); it != memo.end()) return it->second;
    }
    // creation at the base point, or a merge of two nonempty pieces
    const int n = chords - 1;
    long long total = narayana_recursive(n, e - 1) + narayana_recursive(n, e + 1);
    for (int n1 = 1; n1 < n; ++n1)
        for (int e1 = -n1; e1 <= n1; ++e1)
            total += narayana_recursive(n1, e1) * narayana_recursive(n - n1, e - e1);
    std::lock_guard lock(mu);
    memo[{chords, e}] = total;
    return total;
}

std::vector<std::pair<Word, Word>> comparable_pairs(int n_minus, int n_plus) {
    auto ws = all_words(n_minus, n_plus);
    std::vector<std::pair<Word, Word>> out;
    for (const auto& a : ws)
        for (const auto& b : ws)
            if (partial_leq(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<int> pair_to_monotone(const Word& lo, const Word& hi) {
    if (!partial_leq(lo, hi)) throw Error(ErrorKind::NotComparable, lo.str() + " !<= " + hi.str());
    Word a = lo.prepend(true), b = hi.prepend(true);
    std::vector<int> f;
    int j = 0;
    for (int i = 0; i < a.size(); ++i) {
        if (a.plus(i)) ++j;
        f.push_back(b.position(true, j) + 1);
    }
    return f;
}

std::pair<Word, Word> monotone_to_pair(const std::vector<int>& f) {
    const int m = static_cast<int>(f.size());
    if (m == 0) throw Error(ErrorKind::NotMonotone, "empty function");
    for (int i = 0; i < m; ++i) {
        if (f[static_cast<std::size_t>(i)] < 1 || f[static_cast<std::size_t>(i)] > i + 1)
            throw Error(ErrorKind::NotMonotone, "need 1 <= f(i) <= i");
        if (i > 0 && f[static_cast<std::size_t>(i)] < f[static_cast<std::size_t>(i - 1)])
            throw Error(ErrorKind::NotMonotone, "f decreases");
    }
    Word a, b;
    for (int i = 0; i < m; ++i) {
        a = a.append(i == 0 || f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i - 1)]);
        b = b.append(std::find(f.begin(), f.end(), i + 1) != f.end());
    }
    return {a.erase(0), b.erase(0)};
}

WordInterval interval(const Word& lo, const Word& hi) {
    if (!partial_leq(lo, hi)) throw Error(ErrorKind::NotComparable, lo.str() + " !<= " + hi.str());
    WordInterval iv{lo, hi, {}};
    for (const auto& w : all_words(lo.minus_count(), lo.plus_count()))
        if (partial_leq(lo, w) && partial_leq(w, hi)) iv.members.push_back(w);
    return iv;
}

bool forward_move_defined(const Word& w, int i, int j) {
    int pm = w.position(false, i), pp = w.position(true, j);
    return pm >= 0 && pp >= 0 && pm < pp;
}

Word forward_move(const Word& w, int i, int j) {
    int pm = w.position(false, i), pp = w.position(true, j);
    if (pm < 0 || pp < 0 || pm > pp)
        throw Error(ErrorKind::MoveUndefined, "FE(" + std::to_string(i) + "," + std::to_string(j) + ") on " + w.str());
    Word out;
    for (int p = 0; p < pm; ++p) out = out.append(w.plus(p));
    int moved = 0;
    for (int p = pm; p <= pp; ++p) {
        if (w.plus(p)) out = out.append(true);
        else ++moved;
    }
    for (int k = 0; k < moved; ++k) out = out.append(false);
    for (int p = pp + 1; p < w.size(); ++p) out = out.append(w.plus(p));
    return out;
}

Word backward_move(const Word& w, int i, int j) {
    int pm = w.position(false, i), pp = w.position(true, j);
    if (pm < 0 || pp < 0 || pp > pm)
        throw Error(ErrorKind::MoveUndefined, "BE(" + std::to_string(i) + "," + std::to_string(j) + ") on " + w.str());
    Word out;
    for (int p = 0; p < pp; ++p) out = out.append(w.plus(p));
    int moved = 0;
    for (int p = pp; p <= pm; ++p) {
        if (!w.plus(p)) out = out.append(false);
        else ++moved;
    }
    for (int k = 0; k < moved; ++k) out = out.append(true);
    for (int p = pm + 1; p < w.size(); ++p) out = out.append(w.plus(p));
    return out;
}

}  // namespace sutura
