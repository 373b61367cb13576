#pragma once

#include "sutura/element.hpp"
#include "sutura/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sutura {

enum class Side { West, East };

// west: d_i = A+^{west,i}, s_j = B-^{west,j}; east: d_i = A-^{east,i}, s_j = B+^{east,j}
Element face(int i, Side side, const Element& x);
Element degeneracy(int j, Side side, const Element& x);

Element boundary(Side side, const Element& x);
// the same map from the counting formula on sign blocks
Element boundary_closed_form(Side side, const Element& x);

// the original creation operator used as a chain homotopy on each side
Element homotopy(Side side, const Element& x);

struct Check {
    std::string name;
    int n_minus = 0, n_plus = 0;
    bool pass = true;
};

struct Report {
    std::vector<Check> checks;
    std::vector<Check> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
    void add(Check c);
};

Report verify_simplicial_identities(int n_max);
Report verify_double_complex(int n_max);
Report verify_homology_trivial(int n_max, int rank_n_max = 6);

// rank over GF(2); rows are bitsets packed into 64-bit words
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows);

}  // namespace sutura
