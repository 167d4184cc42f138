#include "lrca/field.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lrca {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Plain coefficient-vector arithmetic over GF(p), used for modulus validation
// and table construction before a field object exists.
using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmod(std::uint32_t p, PVec a, const PVec& b) {
    ptrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        // b is monic here, so no leading-coefficient inversion needed
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = (std::uint64_t)c * b[i] % p;
            a[i + shift] = (std::uint32_t)((a[i + shift] + p - t) % p);
        }
        ptrim(a);
    }
    return a;
}

PVec pmul(std::uint32_t p, const PVec& a, const PVec& b) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (std::uint32_t)((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    }
    ptrim(r);
    return r;
}

std::vector<std::uint32_t> factor_primes(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back((std::uint32_t)d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back((std::uint32_t)n);
    return out;
}

} // namespace

bool is_irreducible_over_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    if (coeffs.size() < 2 || coeffs.back() != 1) return false;
    std::uint32_t m = (std::uint32_t)coeffs.size() - 1;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (std::uint32_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PVec div(d + 1, 0);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                div[i] = (std::uint32_t)(v % p);
                v /= p;
            }
            div[d] = 1;
            if (pmod(p, coeffs, div).empty()) return false;
        }
    }
    return true;
}

Elem FiniteField::raw_add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        r += ((da + db) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Elem FiniteField::raw_mul(Elem a, Elem b) const {
    if (m_ == 1) return (Elem)((std::uint64_t)a * b % p_);
    PVec pa(m_), pb(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        pa[i] = a % p_;
        a /= p_;
        pb[i] = b % p_;
        b /= p_;
    }
    PVec pr = pmod(p_, pmul(p_, pa, pb), modulus_);
    Elem r = 0;
    for (std::size_t i = pr.size(); i-- > 0;) r = r * p_ + pr[i];
    return r;
}

void FiniteField::build_tables() {
    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        Elem r = 0, mult = 1, x = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t d = x % p_;
            r += ((p_ - d) % p_) * mult;
            x /= p_;
            mult *= p_;
        }
        neg_[a] = r;
    }

    if (p_ != 2 && (std::uint64_t)q_ * q_ <= (1u << 20)) {
        add_table_.resize((std::size_t)q_ * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b)
                add_table_[(std::size_t)a * q_ + b] = raw_add(a, b);
    }

    // pick the log base: residue class of x if primitive, else smallest primitive
    auto order_is_full = [&](Elem g) {
        std::uint64_t n = q_ - 1;
        for (std::uint32_t f : factor_primes(n)) {
            Elem r = 1, base = g;
            std::uint64_t e = n / f;
            while (e) {
                if (e & 1) r = raw_mul(r, base);
                base = raw_mul(base, base);
                e >>= 1;
            }
            if (r == 1) return false;
        }
        return true;
    };

    alpha_ = 0;
    if (m_ > 1 && order_is_full(p_)) {
        alpha_ = p_; // packed representation of x
    } else {
        for (Elem g = (m_ == 1) ? 2 : 1; g < q_; ++g) {
            if (order_is_full(g)) {
                alpha_ = g;
                break;
            }
        }
    }
    if (alpha_ == 0 && q_ == 2) alpha_ = 1;
    if (alpha_ == 0) throw std::logic_error("no primitive element found");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = raw_mul(x, alpha_);
    }
    if (x != 1) throw std::logic_error("log table construction failed");
    for (std::uint32_t i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

Elem FiniteField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[(std::size_t)a * q_ + b];
    return raw_add(a, b);
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg_[b]); }

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return exp_[(q_ - 1) - log_[a]];
}

Elem FiniteField::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("inversion of zero");
        return e == 0 ? 1 : 0;
    }
    long long n = q_ - 1;
    long long r = ((long long)log_[a] * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[r];
}

Elem FiniteField::pow_alpha(long long e) const { return pow(alpha_, e); }

std::uint32_t FiniteField::log_alpha(Elem a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) throw std::invalid_argument("coefficient vector must have length m");
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        a = a * p_ + c[i];
    }
    return a;
}

Elem FiniteField::element(std::uint32_t index) const {
    if (index >= q_) throw std::out_of_range("element index out of range");
    return index;
}

Elem FiniteField::random_element(std::mt19937_64& rng) const {
    return (Elem)(rng() % q_);
}

std::string FiniteField::to_string(Elem a) const {
    if (is_prime_field()) return std::to_string(a);
    if (a == 0) return "0";
    std::uint32_t e = log_[a];
    if (e == 0) return "1";
    if (e == 1) return "a";
    return "a^" + std::to_string(e);
}

std::string FiniteField::token(Elem a) const {
    if (is_prime_field()) return std::to_string(a);
    std::string s;
    auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(c[i]);
    }
    return s;
}

Elem FiniteField::parse_token(const std::string& s) const {
    if (is_prime_field()) {
        std::uint64_t v = std::stoull(s);
        if (v >= q_) throw std::invalid_argument("element token out of range: " + s);
        return (Elem)v;
    }
    std::vector<std::uint32_t> c;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '.')) c.push_back((std::uint32_t)std::stoul(part));
    return from_coeffs(c);
}

bool FiniteField::same_as(const FiniteField& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

FieldPtr FiniteField::make(std::uint32_t p, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 16)) throw std::invalid_argument("field too large (q must be <= 2^16)");
    }

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->m_ = m;
    f->q_ = (std::uint32_t)q;

    if (m == 1) {
        f->modulus_ = {0, 1}; // x
        if (modulus && !(modulus->size() == 2 && (*modulus)[0] == 0 && (*modulus)[1] == 1))
            throw std::invalid_argument("prime fields take no modulus");
    } else if (modulus) {
        auto& c = *modulus;
        if (c.size() != m + 1) throw std::invalid_argument("modulus must have degree m");
        for (auto x : c)
            if (x >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (c.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible_over_prime_field(p, c))
            throw std::invalid_argument("modulus is reducible");
        f->modulus_ = c;
    } else {
        // lexicographically smallest monic irreducible of degree m: scan the
        // low coefficients (c_0, ..., c_{m-1}) in counting order
        bool found = false;
        for (std::uint64_t idx = 0; idx < q && !found; ++idx) {
            std::vector<std::uint32_t> c(m + 1, 0);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < m; ++i) {
                c[i] = (std::uint32_t)(v % p);
                v /= p;
            }
            c[m] = 1;
            if (is_irreducible_over_prime_field(p, c)) {
                f->modulus_ = c;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    f->build_tables();
    return f;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus) {
    return FiniteField::make(p, m, std::move(modulus));
}

bool Subgroup::contains(Elem a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

Subgroup additive_subgroup(const FieldPtr& field, const std::vector<Elem>& basis) {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= field->characteristic();
    if (expected > field->size()) throw std::invalid_argument("basis too large for field");

    std::set<Elem> span{0};
    for (Elem b : basis) {
        if (b >= field->size()) throw std::invalid_argument("basis element out of range");
        std::set<Elem> next;
        for (Elem s : span) {
            Elem cur = s;
            for (std::uint32_t c = 0; c < field->characteristic(); ++c) {
                next.insert(cur);
                cur = field->add(cur, b);
            }
        }
        span = std::move(next);
    }
    if (span.size() != expected)
        throw std::invalid_argument("basis elements are linearly dependent over the prime field");

    Subgroup H;
    H.kind = Subgroup::Kind::additive;
    H.field = field;
    H.elements.assign(span.begin(), span.end());
    H.generators = basis;
    return H;
}

Subgroup multiplicative_subgroup(const FieldPtr& field, Elem g) {
    if (g == 0) throw std::invalid_argument("generator must be nonzero");
    std::vector<Elem> elems;
    Elem x = 1;
    do {
        elems.push_back(x);
        x = field->mul(x, g);
    } while (x != 1);
    std::sort(elems.begin(), elems.end());

    Subgroup H;
    H.kind = Subgroup::Kind::multiplicative;
    H.field = field;
    H.elements = std::move(elems);
    H.generators = {g};
    return H;
}

std::size_t Partition::block_index_of(Elem a) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), a)) return i;
    throw std::invalid_argument("element not in the ground set");
}

std::size_t Partition::min_block_size() const {
    std::size_t m = blocks.empty() ? 0 : blocks.front().size();
    for (auto& b : blocks) m = std::min(m, b.size());
    return m;
}

std::size_t Partition::max_block_size() const {
    std::size_t m = 0;
    for (auto& b : blocks) m = std::max(m, b.size());
    return m;
}

Partition make_partition(const FieldPtr& field, std::vector<std::vector<Elem>> blocks) {
    Partition P;
    P.field = field;
    std::set<Elem> seen;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty partition block");
        std::sort(b.begin(), b.end());
        for (Elem e : b) {
            if (e >= field->size()) throw std::invalid_argument("block element out of range");
            if (!seen.insert(e).second) throw std::invalid_argument("partition blocks overlap");
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    P.blocks = std::move(blocks);
    P.ground.assign(seen.begin(), seen.end());
    return P;
}

Partition coset_partition(const Subgroup& H, const std::vector<Elem>& ground) {
    const auto& field = H.field;
    std::set<Elem> remaining(ground.begin(), ground.end());
    if (remaining.size() != ground.size())
        throw std::invalid_argument("ground set has repeated elements");

    std::vector<std::vector<Elem>> blocks;
    while (!remaining.empty()) {
        Elem rep = *remaining.begin();
        std::vector<Elem> coset;
        coset.reserve(H.elements.size());
        for (Elem h : H.elements) {
            Elem x = (H.kind == Subgroup::Kind::additive) ? field->add(rep, h)
                                                          : field->mul(rep, h);
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        for (Elem x : coset) {
            if (!remaining.erase(x))
                throw std::invalid_argument("ground set is not a union of cosets");
        }
        blocks.push_back(std::move(coset));
    }

    Partition P = make_partition(field, std::move(blocks));
    P.subgroup = H;
    return P;
}

std::vector<Elem> all_elements(const FieldPtr& field) {
    std::vector<Elem> v(field->size());
    for (std::uint32_t i = 0; i < field->size(); ++i) v[i] = i;
    return v;
}

std::vector<Elem> nonzero_elements(const FieldPtr& field) {
    std::vector<Elem> v(field->size() - 1);
    for (std::uint32_t i = 1; i < field->size(); ++i) v[i - 1] = i;
    return v;
}

} // namespace lrca
