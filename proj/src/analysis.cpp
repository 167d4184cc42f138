#include "lrca/analysis.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "lrca/bounds.hpp"

namespace lrca {

std::optional<long long> DistanceReport::best_upper_bound() const {
    std::optional<long long> best;
    for (auto& [name, v] : upper_bounds)
        if (!best || v < *best) best = v;
    return best;
}

unsigned long long pow_saturating(unsigned long long base, unsigned exp) {
    unsigned long long r = 1;
    const unsigned long long cap = std::numeric_limits<unsigned long long>::max();
    for (unsigned i = 0; i < exp; ++i) {
        if (r > cap / base) return cap;
        r *= base;
    }
    return r;
}

std::size_t rank_of(const Matrix& generator, const std::vector<std::size_t>& coords) {
    if (coords.empty()) return 0;
    return generator.select_columns(coords).rank();
}

namespace {

// Split [begin, end) into `ranges` chunks and fold fn's results with combine.
template <typename Result, typename Fn, typename Combine>
Result run_ranges(unsigned long long begin, unsigned long long end, int ranges, Result init,
                  Fn fn, Combine combine) {
    if (ranges <= 0) ranges = (int)std::max(1u, std::thread::hardware_concurrency());
    unsigned long long total = end - begin;
    if (total == 0) return init;
    if ((unsigned long long)ranges > total) ranges = (int)total;

    std::vector<Result> partial((std::size_t)ranges, init);
    auto worker = [&](int idx) {
        unsigned long long lo = begin + total * (unsigned long long)idx / (unsigned long long)ranges;
        unsigned long long hi =
            begin + total * (unsigned long long)(idx + 1) / (unsigned long long)ranges;
        partial[(std::size_t)idx] = fn(lo, hi);
    };
    if (ranges == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < ranges; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }
    Result out = init;
    for (auto& p : partial) out = combine(out, p);
    return out;
}

void index_to_digits(unsigned long long idx, std::uint32_t q, std::vector<Elem>& digits) {
    for (auto& d : digits) {
        d = (Elem)(idx % q);
        idx /= q;
    }
}

} // namespace

EnumResult min_distance_exhaustive(const EvaluationCode& code, unsigned long long budget,
                                   int ranges) {
    EnumResult res;
    unsigned long long total = pow_saturating(code.field->size(), (unsigned)code.k());
    if (total > budget) {
        res.budget_exceeded = true;
        return res;
    }

    const auto field = code.field;
    std::size_t n = code.points.size(), k = (std::size_t)code.k();
    // dense coefficient table of the basis polynomials
    std::size_t width = 0;
    for (const auto& p : code.basis.polys) width = std::max(width, (std::size_t)(p.degree() + 1));
    std::vector<std::vector<Elem>> basis_coeffs(k, std::vector<Elem>(width, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (int d = 0; d <= code.basis.polys[i].degree(); ++d)
            basis_coeffs[i][(std::size_t)d] = code.basis.polys[i].coeff((std::size_t)d);

    auto chunk = [&](unsigned long long lo, unsigned long long hi) -> long long {
        std::vector<Elem> msg(k), f(width);
        long long best = std::numeric_limits<long long>::max();
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            index_to_digits(idx, field->size(), msg);
            std::fill(f.begin(), f.end(), 0);
            for (std::size_t i = 0; i < k; ++i) {
                if (msg[i] == 0) continue;
                for (std::size_t d = 0; d < width; ++d)
                    if (basis_coeffs[i][d] != 0)
                        f[d] = field->add(f[d], field->mul(msg[i], basis_coeffs[i][d]));
            }
            long long roots = 0;
            for (std::size_t pt = 0; pt < n; ++pt) {
                Elem x = code.points[pt], val = 0;
                for (std::size_t d = width; d-- > 0;) val = field->add(field->mul(val, x), f[d]);
                if (val == 0) ++roots;
            }
            best = std::min(best, (long long)n - roots);
        }
        return best;
    };

    long long best = run_ranges<long long>(
        1, total, ranges, std::numeric_limits<long long>::max(), chunk,
        [](long long a, long long b) { return std::min(a, b); });
    res.value = best;
    res.enumerated = total - 1;
    return res;
}

EnumResult min_distance_exhaustive(const ParityCheckCode& code, unsigned long long budget,
                                   int ranges) {
    EnumResult res;
    unsigned long long total = pow_saturating(code.field->size(), (unsigned)code.k);
    if (total > budget) {
        res.budget_exceeded = true;
        return res;
    }
    const auto field = code.field;
    Matrix g = generator_matrix(code);
    std::size_t n = g.cols(), k = g.rows();

    auto chunk = [&](unsigned long long lo, unsigned long long hi) -> long long {
        std::vector<Elem> msg(k);
        long long best = std::numeric_limits<long long>::max();
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            index_to_digits(idx, field->size(), msg);
            long long w = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Elem s = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if (msg[i] != 0) s = field->add(s, field->mul(msg[i], g.at(i, j)));
                if (s != 0) ++w;
            }
            best = std::min(best, w);
        }
        return best;
    };

    long long best = run_ranges<long long>(
        1, total, ranges, std::numeric_limits<long long>::max(), chunk,
        [](long long a, long long b) { return std::min(a, b); });
    res.value = best;
    res.enumerated = total - 1;
    return res;
}

long long distance_lb_degree(const EvaluationCode& code) {
    int top = 0;
    for (const auto& p : code.basis.polys) top = std::max(top, p.degree());
    return code.n() - top;
}

namespace {

// Degree of gcd(f, z) on raw coefficient buffers (degrees da, dz); trashes both.
int raw_gcd_degree(const FiniteField& F, std::vector<Elem>& a, int da, std::vector<Elem>& b,
                   int db) {
    auto reduce = [&](std::vector<Elem>& x, int dx, const std::vector<Elem>& y, int dy) {
        // x mod y, returns new degree of x
        Elem lead_inv = F.inv(y[(std::size_t)dy]);
        while (dx >= dy) {
            Elem c = F.mul(x[(std::size_t)dx], lead_inv);
            if (c != 0)
                for (int i = 0; i <= dy; ++i)
                    x[(std::size_t)(dx - dy + i)] =
                        F.sub(x[(std::size_t)(dx - dy + i)], F.mul(c, y[(std::size_t)i]));
            while (dx >= 0 && x[(std::size_t)dx] == 0) --dx;
        }
        return dx;
    };
    // Euclid on (a, b)
    std::vector<Elem>*pa = &a, *pb = &b;
    int dpa = da, dpb = db;
    while (dpb >= 0) {
        int nd = reduce(*pa, dpa, *pb, dpb);
        std::swap(pa, pb);
        dpa = dpb;
        dpb = nd;
    }
    return dpa;
}

} // namespace

EnumResult distance_lb_gcd(const EvaluationCode& code, unsigned long long budget, int ranges) {
    EnumResult res;
    std::uint32_t q = code.field->size();
    std::size_t k = (std::size_t)code.k();
    unsigned long long total = pow_saturating(q, (unsigned)k);
    if (total > budget) {
        res.budget_exceeded = true;
        return res;
    }

    const auto field = code.field;
    std::size_t n = code.points.size();
    Polynomial zpoly = vanishing_polynomial(field, code.points);
    std::vector<Elem> zc(n + 1, 0);
    for (int d = 0; d <= zpoly.degree(); ++d) zc[(std::size_t)d] = zpoly.coeff((std::size_t)d);

    std::size_t width = 0;
    for (const auto& p : code.basis.polys) width = std::max(width, (std::size_t)(p.degree() + 1));
    std::vector<std::vector<Elem>> basis_coeffs(k, std::vector<Elem>(width, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (int d = 0; d <= code.basis.polys[i].degree(); ++d)
            basis_coeffs[i][(std::size_t)d] = code.basis.polys[i].coeff((std::size_t)d);

    // one representative per projective class: highest nonzero coefficient = 1;
    // flat index = sum over top of q^top plus the digits below the top
    std::vector<unsigned long long> offsets(k + 1, 0);
    for (std::size_t topi = 0; topi < k; ++topi)
        offsets[topi + 1] = offsets[topi] + pow_saturating(q, (unsigned)topi);
    unsigned long long reps = offsets[k];

    auto chunk = [&](unsigned long long lo, unsigned long long hi) -> long long {
        std::vector<Elem> msg(k), f(width), zbuf(n + 1);
        long long best_gcd = 0;
        std::size_t top = 0;
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            while (top + 1 < k && idx >= offsets[top + 1]) ++top;
            while (idx < offsets[top]) --top;
            unsigned long long sub = idx - offsets[top];
            std::fill(msg.begin(), msg.end(), 0);
            for (std::size_t i = 0; i < top; ++i) {
                msg[i] = (Elem)(sub % q);
                sub /= q;
            }
            msg[top] = 1;

            std::fill(f.begin(), f.end(), 0);
            for (std::size_t i = 0; i <= top; ++i) {
                if (msg[i] == 0) continue;
                for (std::size_t d = 0; d < width; ++d)
                    if (basis_coeffs[i][d] != 0)
                        f[d] = field->add(f[d], field->mul(msg[i], basis_coeffs[i][d]));
            }
            int df = (int)width - 1;
            while (df >= 0 && f[(std::size_t)df] == 0) --df;
            std::copy(zc.begin(), zc.end(), zbuf.begin());
            int dg = raw_gcd_degree(*field, zbuf, (int)n, f, df);
            best_gcd = std::max(best_gcd, (long long)dg);
        }
        return best_gcd;
    };

    long long best = run_ranges<long long>(0, reps, ranges, 0LL, chunk,
                                           [](long long a, long long b) { return std::max(a, b); });
    res.value = (long long)n - best;
    res.enumerated = reps;
    return res;
}

namespace {

std::vector<std::pair<std::string, long long>> eval_upper_bounds(const EvaluationCode& code) {
    std::vector<std::pair<std::string, long long>> ub;
    long long n = code.n(), k = code.k();
    if (k >= 1 && n > k) {
        RecoveryProfile prof(code.profile());
        ub.emplace_back("thm1", bound_thm1(n, k, prof));
        ub.emplace_back("thm2", bound_thm2(n, k, prof));
        bool constant = true;
        for (int r : prof.sorted())
            if (r != prof.sorted().front()) constant = false;
        if (constant) {
            ub.emplace_back("eq1", bound_eq1(n, k, prof.sorted().front(), prof.t()));
            ub.emplace_back("eq2", bound_eq2(n, k, prof.sorted().front(), prof.t()));
        }
        ub.emplace_back("singleton", n - k + 1);
    }
    return ub;
}

} // namespace

DistanceReport distance_report(const EvaluationCode& code, unsigned long long budget,
                               bool with_gcd, int ranges) {
    DistanceReport rep;
    rep.n = code.n();
    rep.k = code.k();
    rep.lb_degree = distance_lb_degree(code);
    rep.method = "evaluation-root-count";
    if (with_gcd) {
        EnumResult g = distance_lb_gcd(code, budget, ranges);
        rep.lb_gcd = g.value;
        rep.enumerated += g.enumerated;
        rep.budget_exceeded |= g.budget_exceeded;
    }
    EnumResult e = min_distance_exhaustive(code, budget, ranges);
    rep.exact = e.value;
    rep.enumerated += e.enumerated;
    rep.budget_exceeded |= e.budget_exceeded;
    rep.upper_bounds = eval_upper_bounds(code);
    return rep;
}

DistanceReport distance_report(const ParityCheckCode& code, unsigned long long budget,
                               int ranges) {
    DistanceReport rep;
    rep.n = code.n;
    rep.k = code.k;
    rep.method = "generator-weight";
    EnumResult e = min_distance_exhaustive(code, budget, ranges);
    rep.exact = e.value;
    rep.enumerated = e.enumerated;
    rep.budget_exceeded = e.budget_exceeded;
    rep.upper_bounds.emplace_back("eq1", bound_eq1(code.n, code.k, code.r, code.t));
    rep.upper_bounds.emplace_back("singleton", code.n - code.k + 1);
    return rep;
}

bool verify_recovering_sets(const Matrix& generator, const RecoveringGraph& graph) {
    if (generator.cols() != graph.n)
        throw std::invalid_argument("graph size does not match code length");
    for (std::size_t v = 0; v < graph.n; ++v) {
        for (const auto& R : graph.sets[v]) {
            std::vector<std::size_t> with = R;
            with.push_back(v);
            if (rank_of(generator, R) != rank_of(generator, with)) return false;
        }
    }
    return true;
}

bool verify_recovering_sets(const EvaluationCode& code, const RecoveringGraph& graph) {
    return verify_recovering_sets(generator_matrix(code), graph);
}

RecoveringGraph discover_recovering_sets(const Matrix& generator, std::vector<int> caps,
                                         unsigned long long subset_budget) {
    std::sort(caps.begin(), caps.end());
    std::size_t n = generator.cols();
    unsigned long long tested = 0;

    std::vector<std::vector<std::vector<std::size_t>>> sets(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::set<std::size_t> used;
        for (int cap : caps) {
            std::vector<std::size_t> candidates;
            for (std::size_t u = 0; u < n; ++u)
                if (u != v && !used.count(u)) candidates.push_back(u);

            std::optional<std::vector<std::size_t>> found;
            for (int size = 1; size <= cap && !found; ++size) {
                if ((std::size_t)size > candidates.size()) break;
                std::vector<std::size_t> pick((std::size_t)size);
                for (int i = 0; i < size; ++i) pick[(std::size_t)i] = (std::size_t)i;
                while (true) {
                    if (++tested > subset_budget)
                        throw std::runtime_error("recovering-set search exceeded the subset budget");
                    std::vector<std::size_t> R;
                    for (std::size_t i : pick) R.push_back(candidates[i]);
                    std::vector<std::size_t> with = R;
                    with.push_back(v);
                    if (rank_of(generator, R) == rank_of(generator, with)) {
                        found = R;
                        break;
                    }
                    // next combination
                    int i = size - 1;
                    while (i >= 0 && pick[(std::size_t)i] == candidates.size() - (std::size_t)(size - i))
                        --i;
                    if (i < 0) break;
                    ++pick[(std::size_t)i];
                    for (int j = i + 1; j < size; ++j) pick[(std::size_t)j] = pick[(std::size_t)(j - 1)] + 1;
                }
            }
            if (!found)
                throw std::runtime_error("no recovering set of the requested size exists for coordinate " +
                                         std::to_string(v));
            for (std::size_t u : *found) used.insert(u);
            sets[v].push_back(std::move(*found));
        }
    }
    return make_recovering_graph(n, caps, std::move(sets));
}

std::optional<bool> check_gamma_columns(const ParityCheckCode& code,
                                        unsigned long long subset_budget) {
    long long g = code.gamma();
    std::size_t n = (std::size_t)code.n;
    if (g < 0 || (std::size_t)g > n) return false;
    if (g == 0) return true;

    // C(n, g) against the budget
    unsigned long long count = 1;
    for (long long i = 0; i < g; ++i) {
        count = count * (unsigned long long)(n - (std::size_t)i) / (unsigned long long)(i + 1);
        if (count > subset_budget) return std::nullopt;
    }

    std::vector<std::size_t> pick((std::size_t)g);
    for (long long i = 0; i < g; ++i) pick[(std::size_t)i] = (std::size_t)i;
    while (true) {
        if (code.H.select_columns(pick).rank() != (std::size_t)g) return false;
        long long i = g - 1;
        while (i >= 0 && pick[(std::size_t)i] == n - (std::size_t)(g - i)) --i;
        if (i < 0) break;
        ++pick[(std::size_t)i];
        for (long long j = i + 1; j < g; ++j) pick[(std::size_t)j] = pick[(std::size_t)(j - 1)] + 1;
    }
    return true;
}

namespace {

RankSet run_rank_algorithm(const Matrix& generator, const RecoveringGraph& graph,
                           const Chooser& chooser) {
    std::size_t k = generator.rows();
    if (k < 2) throw std::invalid_argument("the construction needs k >= 2");
    if (!verify_recovering_sets(generator, graph))
        throw std::invalid_argument("recovering graph is inconsistent with the code");

    std::set<std::size_t> S;
    auto rank_set = [&](const std::set<std::size_t>& s) {
        return rank_of(generator, std::vector<std::size_t>(s.begin(), s.end()));
    };

    RankSet out;
    std::size_t iter = 0;
    while (rank_set(S) <= k - 2) {
        ++iter;
        std::vector<std::size_t> remaining;
        for (std::size_t c = 0; c < graph.n; ++c)
            if (!S.count(c)) remaining.push_back(c);
        std::size_t j = chooser(remaining);

        // Gamma_a(j) = {j} plus the first a recovering sets
        auto gamma_a = [&](int a) {
            std::set<std::size_t> g{j};
            for (int c = 0; c < a; ++c)
                g.insert(graph.sets[j][(std::size_t)c].begin(), graph.sets[j][(std::size_t)c].end());
            return g;
        };

        std::set<std::size_t> full = S;
        auto gt = gamma_a(graph.t());
        full.insert(gt.begin(), gt.end());

        AlgoStep step;
        step.iteration = iter;
        step.j = j;
        std::set<std::size_t> next;
        if (rank_set(full) < k) {
            step.case_taken = 1;
            next = std::move(full);
        } else {
            step.case_taken = 2;
            int a = 0;
            for (; a < graph.t(); ++a) {
                std::set<std::size_t> with = S;
                auto ga1 = gamma_a(a + 1);
                with.insert(ga1.begin(), ga1.end());
                if (rank_set(with) == k) break;
            }
            step.a = a;
            next = S;
            auto ga = gamma_a(a);
            next.insert(ga.begin(), ga.end());
            for (std::size_t cand : graph.sets[j][(std::size_t)a]) {
                if (rank_set(next) == k - 1) break;
                next.insert(cand);
            }
            if (rank_set(next) != k - 1)
                throw std::logic_error("rank k-1 not reachable from the chosen recovering set");
        }
        for (std::size_t c : next)
            if (!S.count(c)) step.added.push_back(c);
        S = std::move(next);
        step.rank_after = rank_set(S);
        out.trace.push_back(std::move(step));
    }
    out.coords.assign(S.begin(), S.end());
    out.rank = rank_set(S);
    return out;
}

} // namespace

RankSet algorithm1(const Matrix& generator, const RecoveringGraph& graph, const Chooser& chooser) {
    Chooser pick = chooser;
    if (!pick) pick = [](const std::vector<std::size_t>& rem) { return rem.front(); };
    return run_rank_algorithm(generator, graph, pick);
}

RankSet algorithm2(const Matrix& generator, const RecoveringGraph& graph,
                   const std::vector<int>& localities) {
    if (localities.size() != graph.n)
        throw std::invalid_argument("one locality per coordinate required");
    Chooser pick = [&localities](const std::vector<std::size_t>& rem) {
        std::size_t best = rem.front();
        for (std::size_t c : rem)
            if (localities[c] < localities[best]) best = c;
        return best;
    };
    return run_rank_algorithm(generator, graph, pick);
}

} // namespace lrca
