#include "sutura/simplicial.hpp"

#include "sutura/error.hpp"
#include "sutura/sfh.hpp"

#include <map>

namespace sutura {

namespace {

OpKind face_kind(Side s) { return s == Side::West ? OpKind::APlusWest : OpKind::AMinusEast; }
OpKind degeneracy_kind(Side s) { return s == Side::West ? OpKind::BMinusWest : OpKind::BPlusEast; }

// the sign deleted by the faces on this side
bool deleted_sign(Side s) { return s == Side::East; }

int face_count(Side s, const Word& w) { return s == Side::West ? w.minus_count() : w.plus_count(); }

std::string side_name(Side s) { return s == Side::West ? "west" : "east"; }

}  // namespace

Element face(int i, Side side, const Element& x) { return apply_operator({face_kind(side), i}, x); }

Element degeneracy(int j, Side side, const Element& x) { return apply_operator({degeneracy_kind(side), j}, x); }

Element boundary(Side side, const Element& x) {
    Element out;
    for (const auto& w : x)
        for (int i = 0; i <= face_count(side, w); ++i) out += face(i, side, Element{w});
    return out;
}

Element boundary_closed_form(Side side, const Element& x) {
    const bool s = deleted_sign(side);
    Element out;
    for (const auto& w : x) {
        for (int p = 0; p < w.size();) {
            if (w.plus(p) != s) {
                ++p;
                continue;
            }
            int q = p;
            while (q < w.size() && w.plus(q) == s) ++q;
            int coeff = q - p + (q == w.size() ? 1 : 0);
            if (coeff % 2 == 1) {
                std::string t = w.str();
                t.erase(static_cast<std::size_t>(p), 1);
                out.toggle(Word::parse(t));
            }
            p = q;
        }
    }
    return out;
}

Element homotopy(Side side, const Element& x) {
    return apply_operator({side == Side::West ? OpKind::BMinus : OpKind::BPlus}, x);
}

void Report::add(Check c) {
    if (!c.pass) failures.push_back(c);
    checks.push_back(std::move(c));
}

Report verify_simplicial_identities(int n_max) {
    Report rep;
    for (Side side : {Side::West, Side::East})
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k) {
                const int nm = n - k, np = k;
                const int top = side == Side::West ? nm : np;
                bool dd = true, ds = true, ss = true;
                for (const auto& w : all_words(nm, np)) {
                    Element x{w};
                    for (int i = 0; i <= top; ++i)
                        for (int j = 0; j <= top; ++j) {
                            if (i < j)
                                dd = dd && face(i, side, face(j, side, x)) == face(j - 1, side, face(i, side, x));
                            if (i <= j) ss = ss && degeneracy(i, side, degeneracy(j, side, x)) == degeneracy(j + 1, side, degeneracy(i, side, x));
                        }
                    for (int j = 0; j <= top; ++j)
                        for (int i = 0; i <= top + 1; ++i) {
                            Element lhs = face(i, side, degeneracy(j, side, x));
                            Element rhs;
                            if (i < j) rhs = degeneracy(j - 1, side, face(i, side, x));
                            else if (i == j || i == j + 1) rhs = x;
                            else rhs = degeneracy(j, side, face(i - 1, side, x));
                            ds = ds && lhs == rhs;
                        }
                }
                rep.add({side_name(side) + " faces of faces", nm, np, dd});
                rep.add({side_name(side) + " faces of degeneracies", nm, np, ds});
                rep.add({side_name(side) + " degeneracies of degeneracies", nm, np, ss});
            }
    return rep;
}

Report verify_double_complex(int n_max) {
    Report rep;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            bool west = true, east = true, commute = true, closed = true;
            for (const auto& w : all_words(n - k, k)) {
                Element x{w};
                const Element dw = boundary(Side::West, x), de = boundary(Side::East, x);
                west = west && boundary(Side::West, dw).empty();
                east = east && boundary(Side::East, de).empty();
                commute = commute && boundary(Side::West, de) == boundary(Side::East, dw);
                closed = closed && dw == boundary_closed_form(Side::West, x) && de == boundary_closed_form(Side::East, x);
            }
            rep.add({"west boundary squares to zero", n - k, k, west});
            rep.add({"east boundary squares to zero", n - k, k, east});
            rep.add({"boundaries commute", n - k, k, commute});
            rep.add({"boundary matches closed form", n - k, k, closed});
        }
    return rep;
}

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    std::size_t rank = 0;
    const std::size_t words = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
        const std::size_t wd = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t p = rank;
        while (p < rows.size() && !(rows[p][wd] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t q = 0; q < rows.size(); ++q)
            if (q != rank && (rows[q][wd] & bit))
                for (std::size_t k = 0; k < words; ++k) rows[q][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

namespace {

// rank of the boundary from words (nm, np) on the given side
std::size_t boundary_rank(Side side, int nm, int np) {
    if (nm < 0 || np < 0) return 0;
    const int tm = side == Side::West ? nm - 1 : nm, tp = side == Side::West ? np : np - 1;
    if (tm < 0 || tp < 0) return 0;
    auto targets = all_words(tm, tp);
    std::map<Word, std::size_t> col;
    for (const auto& t : targets) col.emplace(t, col.size());
    const std::size_t words = (targets.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& w : all_words(nm, np)) {
        std::vector<std::uint64_t> r(words, 0);
        for (const auto& t : boundary(side, Element{w})) {
            const std::size_t c = col.at(t);
            r[c / 64] ^= std::uint64_t{1} << (c % 64);
        }
        rows.push_back(std::move(r));
    }
    return gf2_rank(std::move(rows));
}

}  // namespace

Report verify_homology_trivial(int n_max, int rank_n_max) {
    Report rep;
    for (Side side : {Side::West, Side::East})
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k) {
                bool pass = true;
                for (const auto& w : all_words(n - k, k)) {
                    if (w.empty()) continue;
                    Element x{w};
                    pass = pass && homotopy(side, boundary(side, x)) + boundary(side, homotopy(side, x)) == x;
                }
                rep.add({side_name(side) + " chain homotopy", n - k, k, pass});
            }
    for (Side side : {Side::West, Side::East}) {
        Element v{Word{}};
        if (homotopy(side, boundary(side, v)) + boundary(side, homotopy(side, v)) != v)
            rep.notes.push_back(side_name(side) + ": the homotopy identity gives 0 on the empty word, whose slot carries homology");
    }
    for (Side side : {Side::West, Side::East})
        for (int n = 1; n <= rank_n_max; ++n)
            for (int k = 0; k <= n; ++k) {
                const int nm = n - k, np = k;
                // the slot is exact when the incoming and outgoing ranks fill it
                const std::size_t dim = all_words(nm, np).size();
                const std::size_t out = boundary_rank(side, nm, np);
                const std::size_t in = side == Side::West ? boundary_rank(side, nm + 1, np) : boundary_rank(side, nm, np + 1);
                rep.add({side_name(side) + " exact", nm, np, out + in == dim});
            }
    return rep;
}

}  // namespace sutura
