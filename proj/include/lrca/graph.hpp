#pragma once

#include <cstddef>
#include <vector>

#include "lrca/bounds.hpp"
#include "lrca/codes.hpp"

namespace lrca {

// t-colored recovering structure on coordinates [0, n): sets[v][j] is the
// color-j recovering set of vertex v. Per vertex the sets are disjoint,
// exclude the vertex, and satisfy 1 <= |sets[v][j]| <= caps[j]; caps ascend.
struct RecoveringGraph {
    std::size_t n = 0;
    std::vector<int> caps;
    std::vector<std::vector<std::vector<std::size_t>>> sets;

    int t() const { return (int)caps.size(); }
    RecoveryProfile profile() const { return RecoveryProfile(caps); }
    void validate() const; // throws on a malformed structure
};

RecoveringGraph make_recovering_graph(std::size_t n, std::vector<int> caps,
                                      std::vector<std::vector<std::vector<std::size_t>>> sets);

// Blocks-minus-self recovering sets from the code's partitions; colors are
// ordered by ascending set size (block size - 1).
RecoveringGraph recovering_graph(const EvaluationCode& code);

// Least fixed point of coloring every vertex that has a fully colored
// recovering set, starting from S. Returned sorted.
std::vector<std::size_t> closure(const RecoveringGraph& g, const std::vector<std::size_t>& S);

// |Cl(S)| / |S|; S must be nonempty.
Rational expansion_ratio(const RecoveringGraph& g, const std::vector<std::size_t>& S);

// A set S with v in Cl(S), |S| <= prod r_i and e(S) >= e_t, built by the
// smallest-sets-first recursion.
std::vector<std::size_t> find_expanding_set(const RecoveringGraph& g, std::size_t v);

} // namespace lrca
