#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lrca {

// An element of GF(p^m), packed as an integer in [0, p^m): the base-p digits,
// low digit first, are the coordinates in the power basis of the modulus root.
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// Exact arithmetic context for GF(p^m), q = p^m <= 2^16. Multiplication and
// inversion go through discrete-log tables built once at construction; the
// object is immutable afterwards and safe to share across threads.
class FiniteField {
  public:
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t size() const { return q_; }
    bool is_prime_field() const { return m_ == 1; }

    // Monic modulus, coefficients low-to-high, length m+1. For m = 1 this is x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    // Log/display base: the residue class of x when primitive, otherwise the
    // smallest primitive element. Prime fields use the smallest primitive root.
    Elem alpha() const { return alpha_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    Elem pow_alpha(long long e) const;              // alpha^e, exponent mod q-1
    std::uint32_t log_alpha(Elem a) const;          // a != 0

    std::vector<std::uint32_t> coeffs(Elem a) const;           // length m
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    Elem element(std::uint32_t index) const;        // index in [0, q)
    Elem random_element(std::mt19937_64& rng) const;

    // "0" and "a^j" for extension fields, plain integers for prime fields.
    std::string to_string(Elem a) const;

    // Canonical serialization token: integer for prime fields, dot-joined
    // coefficients low-to-high otherwise (e.g. "1.0.1.1").
    std::string token(Elem a) const;
    Elem parse_token(const std::string& s) const;

    bool same_as(const FiniteField& other) const;

    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  private:
    FiniteField() = default;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;          // 2(q-1) entries, doubled to skip the mod
    std::vector<std::uint32_t> log_; // q entries, log_[0] unused
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;    // q*q entries when q is small, else empty
    Elem alpha_ = 0;

    Elem raw_add(Elem a, Elem b) const;
    Elem raw_mul(Elem a, Elem b) const; // polynomial product mod modulus
    void build_tables();
};

FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

bool is_prime(std::uint64_t n);

// Monic irreducibility test over GF(p) by trial division (small degrees only).
bool is_irreducible_over_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

struct Subgroup {
    enum class Kind { additive, multiplicative };
    Kind kind;
    FieldPtr field;
    std::vector<Elem> elements;    // sorted ascending
    std::vector<Elem> generators;  // basis elements (additive) or one generator

    bool contains(Elem a) const;
};

// Span of GF(p)-linearly independent elements; size p^|basis|.
Subgroup additive_subgroup(const FieldPtr& field, const std::vector<Elem>& basis);

// Cyclic subgroup of the multiplicative group generated by g != 0.
Subgroup multiplicative_subgroup(const FieldPtr& field, Elem g);

struct Partition {
    FieldPtr field;
    std::vector<std::vector<Elem>> blocks; // members sorted; blocks sorted by first member
    std::vector<Elem> ground;              // sorted union of the blocks
    std::optional<Subgroup> subgroup;      // present when built from cosets

    std::size_t block_index_of(Elem a) const; // throws if a is not in the ground set
    std::size_t min_block_size() const;
    std::size_t max_block_size() const;
};

Partition make_partition(const FieldPtr& field, std::vector<std::vector<Elem>> blocks);

// Partition of `ground` into cosets of the subgroup; `ground` must be a
// disjoint union of cosets.
Partition coset_partition(const Subgroup& H, const std::vector<Elem>& ground);

// Every element of the field, in index order.
std::vector<Elem> all_elements(const FieldPtr& field);
std::vector<Elem> nonzero_elements(const FieldPtr& field);

} // namespace lrca
