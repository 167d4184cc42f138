#include "lrca/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrca/bounds.hpp"

namespace lrca {

std::vector<int> EvaluationCode::profile() const {
    std::vector<int> p;
    p.reserve(families.size());
    for (const auto& f : families) p.push_back(f.r);
    return p;
}

Polynomial EvaluationCode::message_polynomial(const std::vector<Elem>& message) const {
    if (message.size() != (std::size_t)k())
        throw std::invalid_argument("message length must equal k");
    Polynomial f(field);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] >= field->size()) throw std::invalid_argument("message symbol out of range");
        if (message[i] != 0) f = f + basis.polys[i].scaled(message[i]);
    }
    return f;
}

std::vector<Elem> EvaluationCode::encode(const std::vector<Elem>& message) const {
    Polynomial f = message_polynomial(message);
    std::vector<Elem> c(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) c[i] = f.eval(points[i]);
    return c;
}

namespace {

std::vector<bool> local_recovery_flags(const PolyBasis& basis,
                                       const std::vector<FamilySpec>& families) {
    std::vector<bool> ok;
    ok.reserve(families.size());
    for (const auto& fam : families) {
        bool good = true;
        for (const auto& p : basis.polys) {
            for (const auto& block : fam.partition.blocks) {
                if (restricted_degree(p, block) > fam.r - 1) {
                    good = false;
                    break;
                }
            }
            if (!good) break;
        }
        ok.push_back(good);
    }
    return ok;
}

} // namespace

EvaluationCode tamo_barg_code(const FieldPtr& field, const std::vector<FamilySpec>& specs,
                              int max_degree, std::string provenance) {
    if (specs.empty()) throw std::invalid_argument("at least one family spec required");
    for (std::size_t i = 0; i < specs.size(); ++i)
        for (std::size_t j = i + 1; j < specs.size(); ++j)
            if (!check_orthogonal(specs[i].partition, specs[j].partition))
                throw std::invalid_argument("partitions are not orthogonal");

    EvaluationCode code;
    code.field = field;
    code.points = specs.front().partition.ground;
    code.basis = intersect_families(specs, max_degree);
    if (code.basis.polys.empty())
        throw std::invalid_argument("family intersection is empty up to the given degree");
    code.families = specs;
    code.max_degree = max_degree;
    code.provenance = std::move(provenance);
    code.local_recovery_ok = local_recovery_flags(code.basis, code.families);
    return code;
}

EvaluationCode construction1(std::uint32_t p, std::uint32_t l, std::uint32_t t) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    if (t < 2) throw std::invalid_argument("availability t must be >= 2");

    FieldPtr field = make_field(p, l * t);
    std::uint64_t block = 1;
    for (std::uint32_t i = 0; i < l; ++i) block *= p;
    int r = (int)block - 1;

    // H_i spans l consecutive power-basis elements; beta^e has packed index p^e
    std::vector<FamilySpec> families;
    std::vector<Subgroup> subgroups;
    auto ground = all_elements(field);
    for (std::uint32_t i = 0; i < t; ++i) {
        std::vector<Elem> basis_elems;
        Elem idx = 1;
        for (std::uint32_t e = 0; e < i * l; ++e) idx *= p;
        for (std::uint32_t j = 0; j < l; ++j) {
            basis_elems.push_back(idx);
            idx *= p;
        }
        Subgroup H = additive_subgroup(field, basis_elems);
        families.push_back({coset_partition(H, ground), r});
        subgroups.push_back(std::move(H));
    }

    std::vector<Polynomial> polys;
    for (int i = 0; i < r; ++i) polys.push_back(Polynomial::monomial(field, (std::size_t)i));
    polys.push_back(annihilator_polynomial(subgroups.front()));

    EvaluationCode code;
    code.field = field;
    code.points = ground;
    code.basis.polys = std::move(polys);
    code.basis.max_degree = r + 1;
    code.families = std::move(families);
    code.max_degree = r + 1;
    code.provenance = "construction1 p=" + std::to_string(p) + " l=" + std::to_string(l) +
                      " t=" + std::to_string(t);
    code.local_recovery_ok = local_recovery_flags(code.basis, code.families);
    return code;
}

Elem ParityCheckCode::alpha_at(int i, int j, int h) const {
    return alphas[(std::size_t)(((i * t) + j) * (r + 1) + h)];
}

std::vector<std::size_t> ParityCheckCode::local_row_support(int i, int j) const {
    std::size_t base = (std::size_t)i * (std::size_t)(t * r + 1);
    std::vector<std::size_t> s{base};
    for (int h = 0; h < r; ++h) s.push_back(base + 1 + (std::size_t)(j * r + h));
    return s;
}

long long ParityCheckCode::gamma() const { return gamma_threshold(n, k, r, t); }

std::vector<Elem> ParityCheckCode::encode(const std::vector<Elem>& message) const {
    if (message.size() != (std::size_t)k)
        throw std::invalid_argument("message length must equal k");
    for (Elem m : message)
        if (m >= field->size()) throw std::invalid_argument("message symbol out of range");
    std::vector<Elem> c((std::size_t)n, 0);
    for (std::size_t i = 0; i < info_positions.size(); ++i) c[info_positions[i]] = message[i];
    std::vector<Elem> parity = encode_matrix.mul_vec(message);
    for (std::size_t i = 0; i < parity_positions.size(); ++i) c[parity_positions[i]] = parity[i];
    return c;
}

namespace {

// q = p^s for prime p
std::pair<std::uint32_t, int> prime_power_split(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int s = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) throw std::invalid_argument("q must be a prime power");
    return {p, s};
}

// F_q-linear independence of field elements, via GF(p) ranks: multiply each
// element by an F_p-basis of F_q and row-reduce the coefficient vectors.
bool independent_over_subfield(const FieldPtr& field, std::uint32_t q, int s,
                               const std::vector<Elem>& elems) {
    FieldPtr fp = make_field(field->characteristic(), 1);
    std::vector<Elem> subfield_basis{1};
    if (s > 1) {
        Elem omega = field->pow_alpha((long long)(field->size() - 1) / (long long)(q - 1));
        Elem w = 1;
        subfield_basis.clear();
        for (int i = 0; i < s; ++i) {
            subfield_basis.push_back(w);
            w = field->mul(w, omega);
        }
    }
    std::vector<std::vector<Elem>> rows;
    for (Elem e : elems) {
        for (Elem g : subfield_basis) {
            auto c = field->coeffs(field->mul(e, g));
            rows.emplace_back(c.begin(), c.end());
        }
    }
    Matrix m = Matrix::from_rows(fp, rows);
    return m.rank() == elems.size() * (std::size_t)s;
}

} // namespace

ParityCheckCode construction2(std::uint32_t q, int r, int t, int v, int k,
                              std::optional<std::vector<Elem>> alphas,
                              std::optional<int> ext_degree) {
    auto [p, s] = prime_power_split(q);
    if (r < 1 || t < 1 || v < 1 || k < 1) throw std::invalid_argument("parameters must be >= 1");
    if (k > v)
        throw std::invalid_argument("need n >= k(tr+1), i.e. k <= v");

    ParityCheckCode code;
    code.q = q;
    code.subfield_degree = s;
    code.r = r;
    code.t = t;
    code.v = v;
    code.k = k;
    code.n = (long long)v * (t * r + 1);
    code.u = (int)(code.n - k - (long long)v * t);

    long long g = gamma_threshold(code.n, code.k, r, t);
    if (g % (t * r + 1) == 0)
        throw std::invalid_argument("constraint tr+1 does not divide Gamma fails for these parameters");

    int m_min = v * (t * (r - 1) + 1);
    code.ext_degree = ext_degree.value_or(m_min);
    if (code.ext_degree < m_min)
        throw std::invalid_argument("extension degree m must be at least v(t(r-1)+1)");

    code.field = make_field(p, (std::uint32_t)(s * code.ext_degree));
    const auto& F = code.field;

    std::size_t alpha_count = (std::size_t)v * (std::size_t)t * (std::size_t)(r + 1);
    if (alphas) {
        if (alphas->size() != alpha_count)
            throw std::invalid_argument("alpha table must have v*t*(r+1) entries");
        code.alphas = std::move(*alphas);
        for (Elem a : code.alphas)
            if (a >= F->size()) throw std::invalid_argument("alpha out of range");
    } else {
        // walk the power basis {1, beta, beta^2, ...} of GF(q^m) over GF(q)
        code.alphas.assign(alpha_count, 0);
        int next = 0;
        auto beta_power = [&](int e) {
            Elem idx = 1;
            for (int i = 0; i < e; ++i) idx *= p;
            return idx; // packed index of x^e; {1, x, ..., x^{m-1}} is an F_q-basis
        };
        for (int i = 0; i < v; ++i) {
            code.alphas[(std::size_t)((i * t + 0) * (r + 1) + 0)] = beta_power(next++);
            for (int j = 0; j < t; ++j)
                for (int h = 1; h < r; ++h)
                    code.alphas[(std::size_t)((i * t + j) * (r + 1) + h)] = beta_power(next++);
        }
    }

    // the required difference set, linearly independent over F_q
    std::vector<Elem> diffs;
    for (int i = 0; i < v; ++i) {
        Elem sum = 0;
        for (int j = 0; j < t; ++j) sum = F->add(sum, code.alpha_at(i, j, r));
        diffs.push_back(F->sub(code.alpha_at(i, 0, 0), sum));
        for (int j = 0; j < t; ++j)
            for (int h = 1; h < r; ++h)
                diffs.push_back(F->sub(code.alpha_at(i, j, h), code.alpha_at(i, j, r)));
    }
    if (!independent_over_subfield(F, q, s, diffs))
        throw std::invalid_argument("alpha difference set is not linearly independent over GF(q)");

    // H = [H_local; H_global]
    std::size_t rows = (std::size_t)v * t + (std::size_t)code.u;
    code.H = Matrix(F, rows, (std::size_t)code.n);
    for (int i = 0; i < v; ++i) {
        std::size_t base = (std::size_t)i * (std::size_t)(t * r + 1);
        code.availability.push_back(base);
        std::vector<std::size_t> group;
        for (int c = 0; c <= t * r; ++c) group.push_back(base + (std::size_t)c);
        code.repair_groups.push_back(group);
        for (int j = 0; j < t; ++j) {
            std::size_t row = (std::size_t)(i * t + j);
            code.H.set(row, base, 1);
            for (int h = 0; h < r; ++h) code.H.set(row, base + 1 + (std::size_t)(j * r + h), 1);
        }
    }
    auto q_power_column = [&](Elem a) {
        std::vector<Elem> col((std::size_t)code.u);
        Elem x = a;
        for (int w = 0; w < code.u; ++w) {
            col[(std::size_t)w] = x;
            x = F->pow(x, (long long)q);
        }
        return col;
    };
    for (int i = 0; i < v; ++i) {
        std::size_t base = (std::size_t)i * (std::size_t)(t * r + 1);
        auto col = q_power_column(code.alpha_at(i, 0, 0));
        for (int w = 0; w < code.u; ++w) code.H.set((std::size_t)(v * t + w), base, col[(std::size_t)w]);
        for (int j = 0; j < t; ++j) {
            for (int h = 1; h <= r; ++h) {
                col = q_power_column(code.alpha_at(i, j, h));
                std::size_t column = base + 1 + (std::size_t)(j * r + h - 1);
                for (int w = 0; w < code.u; ++w)
                    code.H.set((std::size_t)(v * t + w), column, col[(std::size_t)w]);
            }
        }
    }

    if (code.H.rank() != rows)
        throw std::runtime_error("parity-check matrix is rank-deficient");

    // systematic encoding: information symbols on the first k availability columns
    code.info_positions.assign(code.availability.begin(), code.availability.begin() + k);
    for (std::size_t c = 0; c < (std::size_t)code.n; ++c)
        if (!std::binary_search(code.info_positions.begin(), code.info_positions.end(), c))
            code.parity_positions.push_back(c);

    Matrix hp = code.H.select_columns(code.parity_positions);
    Matrix hi = code.H.select_columns(code.info_positions);
    Matrix hp_inv = hp.inverse(); // throws if the parity positions are not an information set complement
    Matrix neg_hi(F, hi.rows(), hi.cols());
    for (std::size_t i = 0; i < hi.rows(); ++i)
        for (std::size_t j = 0; j < hi.cols(); ++j) neg_hi.set(i, j, F->neg(hi.at(i, j)));
    code.encode_matrix = hp_inv * neg_hi;
    return code;
}

Matrix generator_matrix(const EvaluationCode& code) {
    Matrix g(code.field, (std::size_t)code.k(), (std::size_t)code.n());
    for (std::size_t i = 0; i < (std::size_t)code.k(); ++i)
        for (std::size_t j = 0; j < (std::size_t)code.n(); ++j)
            g.set(i, j, code.basis.polys[i].eval(code.points[j]));
    if (g.rank() != (std::size_t)code.k()) throw std::runtime_error("generator matrix is rank-deficient");
    return g;
}

Matrix parity_check_matrix(const EvaluationCode& code) {
    return generator_matrix(code).null_space();
}

Matrix generator_matrix(const ParityCheckCode& code) {
    Matrix g = code.H.null_space();
    if (g.rows() != (std::size_t)code.k) throw std::runtime_error("null space dimension is not k");
    return g;
}

Matrix parity_check_matrix(const ParityCheckCode& code) { return code.H; }

} // namespace lrca
