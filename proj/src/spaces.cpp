#include "lrca/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrca {

std::vector<int> PolyBasis::degrees() const {
    std::vector<int> d;
    d.reserve(polys.size());
    for (const auto& p : polys) d.push_back(p.degree());
    return d;
}

bool is_constant_on(const Polynomial& f, const Partition& P) {
    for (const auto& block : P.blocks) {
        Elem v0 = f.eval(block.front());
        for (std::size_t i = 1; i < block.size(); ++i)
            if (f.eval(block[i]) != v0) return false;
    }
    return true;
}

bool check_orthogonal(const Partition& a, const Partition& b) {
    if (a.ground != b.ground)
        throw std::invalid_argument("partitions have different ground sets");
    for (const auto& ba : a.blocks) {
        for (const auto& bb : b.blocks) {
            std::size_t common = 0;
            auto it = ba.begin();
            for (Elem x : bb) {
                while (it != ba.end() && *it < x) ++it;
                if (it != ba.end() && *it == x && ++common > 1) return false;
            }
        }
    }
    return true;
}

int restricted_degree(const Polynomial& f, const std::vector<Elem>& block) {
    const auto& field = f.field();
    Polynomial interp(field);
    for (std::size_t i = 0; i < block.size(); ++i) {
        Elem yi = f.eval(block[i]);
        if (yi == 0) continue;
        Polynomial li = Polynomial::constant(field, 1);
        Elem denom = 1;
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j == i) continue;
            li = li * Polynomial(field, {field->neg(block[j]), 1});
            denom = field->mul(denom, field->sub(block[i], block[j]));
        }
        interp = interp + li.scaled(field->mul(yi, field->inv(denom)));
    }
    return interp.degree();
}

namespace {

std::vector<std::vector<Elem>> poly_rows(const std::vector<Polynomial>& polys,
                                         std::size_t ncols) {
    std::vector<std::vector<Elem>> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        if ((std::size_t)(p.degree() + 1) > ncols)
            throw std::invalid_argument("polynomial degree exceeds row width");
        std::vector<Elem> r(ncols, 0);
        for (int i = 0; i <= p.degree(); ++i) r[(std::size_t)i] = p.coeff((std::size_t)i);
        rows.push_back(std::move(r));
    }
    return rows;
}

// Reduced echelon with pivots at the highest degrees: reverse the column
// order, run rref, reverse back.
std::vector<std::vector<Elem>> degree_echelon(const FieldPtr& field,
                                              std::vector<std::vector<Elem>> rows,
                                              std::size_t ncols) {
    for (auto& r : rows) std::reverse(r.begin(), r.end());
    Matrix m = Matrix::from_rows(field, rows);
    std::vector<std::size_t> piv;
    Matrix red = m.rref(&piv);
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        auto r = red.row(i);
        std::reverse(r.begin(), r.end());
        out.push_back(std::move(r));
    }
    (void)ncols;
    return out;
}

} // namespace

PolyBasis echelon_basis(const FieldPtr& field, const std::vector<Polynomial>& polys,
                        std::size_t ncols) {
    auto rows = degree_echelon(field, poly_rows(polys, ncols), ncols);
    PolyBasis basis;
    basis.max_degree = (int)ncols - 1;
    for (auto& r : rows) basis.polys.emplace_back(field, std::move(r));
    std::sort(basis.polys.begin(), basis.polys.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    return basis;
}

PolyBasis constant_space_basis(const Partition& P) {
    if (!P.subgroup)
        throw std::invalid_argument("partition does not carry a generating subgroup");
    const auto& field = P.field;
    std::size_t n = P.ground.size();
    Polynomial g = constant_polynomial(*P.subgroup);
    Polynomial z = vanishing_polynomial(field, P.ground);

    std::vector<Polynomial> polys;
    Polynomial cur = Polynomial::constant(field, 1);
    for (std::size_t s = 0; s < P.blocks.size(); ++s) {
        Polynomial member = cur;
        if ((std::size_t)member.degree() >= n) member = member % z;
        polys.push_back(member);
        cur = cur * g;
    }
    PolyBasis basis = echelon_basis(field, polys, n);
    basis.max_degree = (int)n;
    return basis;
}

PolyBasis family_basis(const FamilySpec& spec) {
    if (spec.r < 1 || (std::size_t)spec.r > spec.partition.min_block_size())
        throw std::invalid_argument("family degree bound must satisfy 1 <= r <= block size");
    PolyBasis constant = constant_space_basis(spec.partition);
    std::vector<Polynomial> polys;
    for (const auto& b : constant.polys)
        for (int i = 0; i < spec.r; ++i) polys.push_back(b.shifted((std::size_t)i));
    std::size_t n = spec.partition.ground.size();
    PolyBasis basis = echelon_basis(spec.partition.field, polys, n);
    basis.max_degree = (int)n;
    return basis;
}

namespace {

// Zassenhaus: rows of [(A|A); (B|0)] whose reduced form has zero left half
// carry a basis of the row-space intersection in the right half.
std::vector<std::vector<Elem>> intersect_rowspaces(const FieldPtr& field,
                                                   const std::vector<std::vector<Elem>>& A,
                                                   const std::vector<std::vector<Elem>>& B,
                                                   std::size_t n) {
    std::vector<std::vector<Elem>> stacked;
    for (const auto& r : A) {
        std::vector<Elem> row(2 * n);
        std::copy(r.begin(), r.end(), row.begin());
        std::copy(r.begin(), r.end(), row.begin() + (std::ptrdiff_t)n);
        stacked.push_back(std::move(row));
    }
    for (const auto& r : B) {
        std::vector<Elem> row(2 * n, 0);
        std::copy(r.begin(), r.end(), row.begin());
        stacked.push_back(std::move(row));
    }
    Matrix red = Matrix::from_rows(field, stacked).rref();
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < red.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (red.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        auto full = red.row(i);
        std::vector<Elem> right(full.begin() + (std::ptrdiff_t)n, full.end());
        bool nonzero = false;
        for (Elem v : right)
            if (v != 0) nonzero = true;
        if (nonzero) out.push_back(std::move(right));
    }
    return out;
}

} // namespace

PolyBasis intersect_families(const std::vector<FamilySpec>& specs, int max_degree) {
    if (specs.empty()) throw std::invalid_argument("no family specs given");
    const auto& field = specs.front().partition.field;
    const auto& ground = specs.front().partition.ground;
    for (const auto& s : specs)
        if (s.partition.ground != ground)
            throw std::invalid_argument("family specs have different ground sets");
    std::size_t n = ground.size();
    if (max_degree < 0 || (std::size_t)max_degree > n)
        throw std::invalid_argument("max degree must lie in [0, |A|]");

    std::vector<std::vector<Elem>> current = poly_rows(family_basis(specs[0]).polys, n);
    for (std::size_t i = 1; i < specs.size() && !current.empty(); ++i) {
        auto next = poly_rows(family_basis(specs[i]).polys, n);
        current = intersect_rowspaces(field, current, next, n);
    }

    PolyBasis all = [&] {
        std::vector<Polynomial> polys;
        for (auto& r : current) polys.emplace_back(field, std::move(r));
        return echelon_basis(field, polys, n);
    }();

    PolyBasis basis;
    basis.max_degree = max_degree;
    for (auto& p : all.polys)
        if (p.degree() <= max_degree) basis.polys.push_back(std::move(p));
    return basis;
}

} // namespace lrca
