#include "sutura/element.hpp"

#include "sutura/error.hpp"

namespace sutura {

void Element::toggle(const Word& w) {
    if (!words_.empty() && words_.begin()->size() != w.size())
        throw Error(ErrorKind::LengthMismatch, "element mixes word lengths");
    if (!words_.erase(w)) words_.insert(w);
}

Element Element::prefixed(bool plus_sign) const {
    Element out;
    for (const auto& w : words_) out.toggle(w.prepend(plus_sign));
    return out;
}

Element Element::suffixed(bool plus_sign) const {
    Element out;
    for (const auto& w : words_) out.toggle(w.append(plus_sign));
    return out;
}

std::string Element::str() const {
    if (words_.empty()) return "0";
    std::string s;
    for (const auto& w : words_) {
        if (!s.empty()) s += " + ";
        s += w.empty() ? std::string("()") : w.str();
    }
    return s;
}

}  // namespace sutura
