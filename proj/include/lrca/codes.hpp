#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrca/matrix.hpp"
#include "lrca/spaces.hpp"

namespace lrca {

// Polynomial-evaluation code: messages are coefficient vectors on the basis
// polynomials, codewords their evaluations on the (ordered) point set.
struct EvaluationCode {
    FieldPtr field;
    std::vector<Elem> points;
    PolyBasis basis;
    std::vector<FamilySpec> families;
    int max_degree = 0;          // m; every basis degree is <= m, so d >= n - m
    std::string provenance;
    std::vector<bool> local_recovery_ok; // per family: restrictions have degree <= r-1

    long long n() const { return (long long)points.size(); }
    long long k() const { return (long long)basis.polys.size(); }
    int t() const { return (int)families.size(); }
    std::vector<int> profile() const;
    long long declared_distance_lb() const { return n() - max_degree; }

    Polynomial message_polynomial(const std::vector<Elem>& message) const;
    std::vector<Elem> encode(const std::vector<Elem>& message) const;
};

// Explicit parity-check code over GF(q^m): v repair groups of 1+tr coordinates,
// t all-ones local rows per group, u global rows of q-power columns.
struct ParityCheckCode {
    FieldPtr field;      // GF(q^m) realized as GF(p^{s*m})
    std::uint32_t q = 0; // subfield size, q = p^s
    int subfield_degree = 1; // s
    int ext_degree = 0;      // m, extension degree over GF(q)
    int r = 0, t = 0, v = 0, u = 0;
    long long n = 0, k = 0;
    Matrix H;                                     // (vt+u) x n
    std::vector<std::size_t> availability;        // v coordinates
    std::vector<std::vector<std::size_t>> repair_groups; // per group, 1+tr coords
    std::vector<Elem> alphas;  // [i][j][h] flattened, h in 0..r; h=0 used for j=0 only
    std::vector<std::size_t> info_positions, parity_positions;
    Matrix encode_matrix;      // parity = encode_matrix * message

    Elem alpha_at(int i, int j, int h) const;
    std::vector<std::size_t> local_row_support(int i, int j) const;
    long long gamma() const;
    std::vector<Elem> encode(const std::vector<Elem>& message) const;
};

// General availability code from orthogonal partitions: k = dim of the
// family intersection truncated to degree <= max_degree, d >= n - max_degree.
EvaluationCode tamo_barg_code(const FieldPtr& field, const std::vector<FamilySpec>& specs,
                              int max_degree, std::string provenance = "tamo-barg");

// All-symbol locality instance with n = (r+1)^t, k = r+1, r+1 = p^l: basis
// <1, x, ..., x^{r-1}, g_1> over the coordinate-subgroup partitions.
EvaluationCode construction1(std::uint32_t p, std::uint32_t l, std::uint32_t t);

// Information-locality instance: block-diagonal local parity checks stacked
// on q-power global rows; the default alpha table walks a polynomial basis of
// GF(q^m)/GF(q) with alpha_{i,j,r} = 0, making the required difference set
// linearly independent by construction.
ParityCheckCode construction2(std::uint32_t q, int r, int t, int v, int k,
                              std::optional<std::vector<Elem>> alphas = std::nullopt,
                              std::optional<int> ext_degree = std::nullopt);

Matrix generator_matrix(const EvaluationCode& code);
Matrix parity_check_matrix(const EvaluationCode& code);
Matrix generator_matrix(const ParityCheckCode& code);
Matrix parity_check_matrix(const ParityCheckCode& code);

} // namespace lrca
