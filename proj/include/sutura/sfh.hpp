#pragma once

#include "sutura/diagram.hpp"
#include "sutura/element.hpp"
#include "sutura/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sutura {

Diagram basis_diagram(const Word& w);
Diagram basis_diagram_from_root(const Word& w);

// construction data of a basis diagram: creation order and region numberings
struct BasisAnatomy {
    Diagram diagram;
    int root = 0;
    std::vector<int> created;           // per chord id: step that drew it (root chord = n)
    std::vector<int> base_minus_region;  // [i-1] -> region id
    std::vector<int> base_plus_region;
    std::vector<int> root_minus_region;
    std::vector<int> root_plus_region;
    std::vector<int> region_of_arc;
};
BasisAnatomy anatomy(const Word& w);

inline int root_point(int chords, int e) { return chords - 1 + e + 1; }  // 2 n_plus + 1

// the two other members of the bypass triple of the arc hugging the boundary at y:
// first has outermost chord (y-1, y), second has (y, y+1)
std::pair<Diagram, Diagram> boundary_bypass(const Diagram& g, int y);
// delete an outermost chord on (p, p+1) and relabel
Diagram remove_outermost(const Diagram& g, int p);

Element decompose(const DiagramOrZero& g);
Element decompose_from_root(const DiagramOrZero& g);
bool is_basis(const Diagram& g);

// memo spill support
std::vector<std::pair<Diagram, Element>> decompose_cache_snapshot();
void decompose_cache_seed(const Diagram& g, const Element& x);

enum class OpKind { BPlus, BMinus, APlus, AMinus, BMinusWest, APlusWest, BPlusEast, AMinusEast };

struct GradedOperator {
    OpKind kind;
    int index = -1;  // west/east position; ignored by the base point operators
    std::string name() const;
    std::pair<int, int> shift() const;  // (delta n_minus, delta n_plus)
};

Element apply_operator(const GradedOperator& op, const Element& x);
DiagramOrZero apply_operator(const GradedOperator& op, const Diagram& g);

std::pair<Word, Word> phi(const DiagramOrZero& g);
Diagram from_pair(const Word& lo, const Word& hi);

// nullopt plays the role of the null diagram
Element merge_elements(const std::optional<Element>& x1, const std::optional<Element>& x2);

using BitMatrix = std::vector<std::vector<std::uint8_t>>;
enum class RotationImpl { Geometric, Minors, Explicit };

constexpr int kRotationStep = -2;
Element rotation(const Element& x, RotationImpl impl = RotationImpl::Geometric);
// columns and rows indexed by lex-ordered words of length n with k plus signs
BitMatrix rotation_matrix(int n, int k, RotationImpl impl = RotationImpl::Geometric);

}  // namespace sutura
