#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrca/field.hpp"

namespace lrca {

// Dense univariate polynomial over a finite field, coefficients low-to-high.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<Elem> coeffs);

    static Polynomial monomial(FieldPtr field, std::size_t deg, Elem c = 1);
    static Polynomial constant(FieldPtr field, Elem c);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial scaled(Elem c) const;
    Polynomial shifted(std::size_t i) const; // multiply by x^i
    Polynomial monic() const;
    Polynomial pow(unsigned e) const;

    // quotient and remainder; divisor must be nonzero
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

    Elem eval(Elem x) const;

    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<Elem> c_;

    void trim();
    void check_field(const Polynomial& rhs) const;
};

// Monic gcd; arguments must not both be zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// prod_{h in H} (x - h): monic, degree |H|, vanishes exactly on H and is
// constant on each coset of H.
Polynomial annihilator_polynomial(const Subgroup& H);

// The degree-|H| polynomial used to span the coset-constant space: x^{|H|}
// for multiplicative subgroups, the annihilator itself for additive ones.
Polynomial constant_polynomial(const Subgroup& H);

// prod_{a in points} (x - a)
Polynomial vanishing_polynomial(const FieldPtr& field, const std::vector<Elem>& points);

} // namespace lrca
