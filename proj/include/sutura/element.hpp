#pragma once

#include <ostream>

#include "sutura/word.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace sutura {

// mod-2 sum of basis vectors v_w, all words of one length
class Element {
public:
    Element() = default;
    Element(std::initializer_list<Word> ws) {
        for (const auto& w : ws) toggle(w);
    }
    explicit Element(const Word& w) { toggle(w); }

    void toggle(const Word& w);
    Element& operator+=(const Element& o) {
        for (const auto& w : o.words_) toggle(w);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend bool operator==(const Element&, const Element&) = default;

    bool empty() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }
    bool contains(const Word& w) const { return words_.count(w) != 0; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }
    const Word& front() const { return *words_.begin(); }
    const Word& back() const { return *words_.rbegin(); }
    std::vector<Word> words() const { return {words_.begin(), words_.end()}; }

    // prefix / suffix every word with a sign
    Element prefixed(bool plus_sign) const;
    Element suffixed(bool plus_sign) const;

    std::string str() const;

private:
    std::set<Word> words_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.str(); }

}  // namespace sutura
