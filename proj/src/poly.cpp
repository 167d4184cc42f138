#include "lrca/poly.hpp"

#include <stdexcept>

namespace lrca {

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem x : c_)
        if (x >= field_->size()) throw std::invalid_argument("coefficient out of range");
    trim();
}

Polynomial Polynomial::monomial(FieldPtr field, std::size_t deg, Elem c) {
    if (c == 0) return Polynomial(std::move(field));
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::constant(FieldPtr field, Elem c) { return monomial(std::move(field), 0, c); }

Elem Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Polynomial::check_field(const Polynomial& rhs) const {
    if (!field_ || !rhs.field_ || !field_->same_as(*rhs.field_))
        throw std::invalid_argument("polynomial operands over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_field(rhs);
    std::vector<Elem> r(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->add(coeff(i), rhs.coeff(i));
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_field(rhs);
    std::vector<Elem> r(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->sub(coeff(i), rhs.coeff(i));
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_field(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(field_);
    std::vector<Elem> r(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(c_[i], rhs.c_[j]));
    }
    return Polynomial(field_, std::move(r));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return c_ == rhs.c_ && (c_.empty() || field_->same_as(*rhs.field_));
}

Polynomial Polynomial::scaled(Elem c) const {
    if (c == 0) return Polynomial(field_);
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], c);
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::shifted(std::size_t i) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(c_.size() + i, 0);
    std::copy(c_.begin(), c_.end(), r.begin() + i);
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    return scaled(field_->inv(c_.back()));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(field_, 1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check_field(divisor);
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Elem> rem = c_;
    std::vector<Elem> quot(rem.size() > divisor.c_.size() ? rem.size() - divisor.c_.size() + 1 : 1, 0);
    Elem lead_inv = field_->inv(divisor.c_.back());
    while (rem.size() >= divisor.c_.size()) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        Elem c = field_->mul(rem.back(), lead_inv);
        std::size_t shift = rem.size() - divisor.c_.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem[i + shift] = field_->sub(rem[i + shift], field_->mul(c, divisor.c_[i]));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Elem Polynomial::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = field_->add(field_->mul(r, x), c_[i]);
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string coeff_str = field_->to_string(c_[i]);
        if (i == 0) {
            s += coeff_str;
        } else {
            if (c_[i] != 1) s += coeff_str + " ";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Polynomial annihilator_polynomial(const Subgroup& H) {
    Polynomial g = Polynomial::constant(H.field, 1);
    for (Elem h : H.elements)
        g = g * Polynomial(H.field, {H.field->neg(h), 1});
    return g;
}

Polynomial constant_polynomial(const Subgroup& H) {
    if (H.kind == Subgroup::Kind::multiplicative)
        return Polynomial::monomial(H.field, H.elements.size());
    return annihilator_polynomial(H);
}

Polynomial vanishing_polynomial(const FieldPtr& field, const std::vector<Elem>& points) {
    Polynomial z = Polynomial::constant(field, 1);
    for (Elem a : points)
        z = z * Polynomial(field, {field->neg(a), 1});
    return z;
}

} // namespace lrca
