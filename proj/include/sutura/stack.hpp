#pragma once

#include "sutura/diagram.hpp"
#include "sutura/surgery.hpp"
#include "sutura/word.hpp"

#include <utility>
#include <vector>

namespace sutura {

// bottom point k is joined to top point k + shift after rounding the edges
constexpr int kConnectorShift = -1;

// nodes 0..2N-1 are bottom points B_k, 2N..4N-1 top points T_k
struct SutureGraph {
    int chords = 0;
    std::vector<std::pair<int, int>> edges;
    int loops() const;
};

SutureGraph suture_graph(const Diagram& g0, const Diagram& g1, int shift = kConnectorShift);

int m_geometric(const Diagram& g0, const Diagram& g1);
int m_algebraic(const Diagram& g0, const Diagram& g1);
inline int m(const Diagram& g0, const Diagram& g1) { return m_geometric(g0, g1); }

// strips the first outermost chord the two diagrams share
std::pair<Diagram, Diagram> cancel_outermost(const Diagram& g0, const Diagram& g1);

bool arc_is_inner(const Diagram& g0, const Diagram& g1, const AttachingArc& c);

// every diagram reachable from g0 by inner upward moves inside M(g0, g1)
const std::vector<Diagram>& diagrams_in(const Diagram& g0, const Diagram& g1);
bool diagram_exists_in(const Diagram& g, const Diagram& g0, const Diagram& g1);

struct BoundedCategory {
    Diagram lo, hi;
    std::vector<Diagram> objects;                // sorted
    std::vector<std::pair<int, int>> morphisms;  // includes identities
    bool reflexive = false, transitive = false, antisymmetric = false;

    bool has(int a, int b) const;
    std::vector<std::pair<int, int>> hasse() const;
};

BoundedCategory bounded_category(const Diagram& g0, const Diagram& g1);

// the category on the interval [lo, hi] of words, with the partial order as morphisms
BoundedCategory word_category(const Word& lo, const Word& hi);
bool poset_isomorphic(const BoundedCategory& a, const BoundedCategory& b);

struct BypassCobordism {
    int n_minus = 1, n_plus = 1;
    BoundedCategory category;
};
BypassCobordism bypass_cobordism_category(const Diagram& g0, const AttachingArc& c);

}  // namespace sutura
