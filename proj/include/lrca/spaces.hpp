#pragma once

#include <vector>

#include "lrca/matrix.hpp"
#include "lrca/poly.hpp"

namespace lrca {

// One locality family over a partition of the evaluation set: polynomials
// whose restriction to every block has degree at most r-1.
struct FamilySpec {
    Partition partition;
    int r = 1;
};

// Echelon basis: monic polynomials of strictly increasing, pairwise distinct
// degrees, fully reduced against each other.
struct PolyBasis {
    std::vector<Polynomial> polys;
    int max_degree = 0;

    std::size_t dimension() const { return polys.size(); }
    std::vector<int> degrees() const;
};

// True iff evaluations of f agree within every block.
bool is_constant_on(const Polynomial& f, const Partition& P);

// True iff every cross-pair of blocks meets in at most one point.
bool check_orthogonal(const Partition& a, const Partition& b);

// Degree of the interpolation polynomial of f restricted to the block points.
int restricted_degree(const Polynomial& f, const std::vector<Elem>& block);

// <1, g, g^2, ..., g^{#blocks - 1}> for the subgroup's constant polynomial g,
// as a reduced echelon basis. The partition must carry its generating subgroup.
PolyBasis constant_space_basis(const Partition& P);

// Direct sum  span{ b x^i : b in constant basis, 0 <= i < r }, echelon-reduced.
PolyBasis family_basis(const FamilySpec& spec);

// Echelon basis of the intersection of all family spans, truncated to
// degree <= max_degree.
PolyBasis intersect_families(const std::vector<FamilySpec>& specs, int max_degree);

// Reduced degree-echelon basis of the span of arbitrary polynomials
// (degrees < ncols).
PolyBasis echelon_basis(const FieldPtr& field, const std::vector<Polynomial>& polys,
                        std::size_t ncols);

} // namespace lrca
