#include "lrca/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrca {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void check_nkrt(long long n, long long k, int r, int t, int min_t) {
    if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    if (t < min_t) throw std::invalid_argument("availability t too small");
}

} // namespace

RecoveryProfile::RecoveryProfile(std::vector<int> rs) : given_(rs) {
    if (rs.empty()) throw std::invalid_argument("profile must be nonempty");
    for (int r : rs)
        if (r < 1) throw std::invalid_argument("profile entries must be >= 1");
    sorted_ = std::move(rs);
    std::sort(sorted_.begin(), sorted_.end());
}

long long RecoveryProfile::prefix_product(int i) const {
    if (i < 0 || i > t()) throw std::out_of_range("prefix index out of range");
    long long p = 1;
    for (int j = 0; j < i; ++j) p *= sorted_[(std::size_t)j];
    return p;
}

LocalityProfile::LocalityProfile(std::map<int, long long> c, int t_) : counts(std::move(c)), t(t_) {
    if (t < 1) throw std::invalid_argument("availability must be >= 1");
    for (auto it = counts.begin(); it != counts.end();) {
        if (it->first < 1) throw std::invalid_argument("locality values must be >= 1");
        if (it->second < 0) throw std::invalid_argument("locality counts must be >= 0");
        it = (it->second == 0) ? counts.erase(it) : std::next(it);
    }
    if (counts.empty()) throw std::invalid_argument("locality profile must have k >= 1");
}

long long LocalityProfile::k() const {
    long long s = 0;
    for (auto& [j, kj] : counts) s += kj;
    return s;
}

int LocalityProfile::r_max() const { return counts.rbegin()->first; }

long long RadixDecomposition::reconstruct() const {
    int t = profile.t();
    long long m = beta * profile.sorted().back() * profile.prefix_product(t);
    for (int i = 1; i <= t; ++i) m += alpha[(std::size_t)i] * profile.prefix_product(i);
    return m + alpha[0];
}

long long bound_eq1(long long n, long long k, int r, int t) {
    check_nkrt(n, k, r, t, 1);
    return n - k - ceil_div(t * (k - 1) + 1, (long long)t * (r - 1) + 1) + 2;
}

long long bound_eq2(long long n, long long k, int r, int t) {
    check_nkrt(n, k, r, t, 0);
    long long sum = 0, power = 1;
    for (int i = 0; i <= t; ++i) {
        sum += (k - 1) / power;
        if (power > n) break; // remaining terms are zero
        power *= r;
    }
    return n - sum;
}

long long bound_thm1(long long n, long long k, const RecoveryProfile& profile) {
    if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
    long long denom = 1;
    for (int r : profile.sorted()) denom += r - 1;
    long long t = profile.t();
    return n - k - ceil_div(t * (k - 1) + 1, denom) + 2;
}

long long bound_thm2(long long n, long long k, const RecoveryProfile& profile) {
    if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
    long long sum = 0;
    for (int i = 1; i <= profile.t(); ++i) sum += (k - 1) / profile.prefix_product(i);
    return n - k + 1 - sum;
}

long long bound_thm3(long long n, const LocalityProfile& profile) {
    long long k = profile.k();
    if (n <= k) throw std::invalid_argument("need n > k");
    int r = profile.r_max();
    long long t = profile.t;
    long long sum = 0;
    for (auto& [j, kj] : profile.counts) {
        if (j == r) continue;
        sum += ceil_div(kj, t * (j - 1) + 1);
    }
    long long kr = profile.counts.at(r);
    return n - k + 2 - t * sum - ceil_div(t * (kr - 1) + 1, t * (r - 1) + 1);
}

long long gamma_threshold(long long n, long long k, int r, int t) {
    check_nkrt(n, k, r, t, 1);
    return n - k + 1 - ceil_div(t * (k - 1) + 1, (long long)t * (r - 1) + 1);
}

long long effective_bound(long long raw, long long n, long long k) {
    return std::min(raw, n - k + 1);
}

RadixDecomposition radix_decompose(long long m, const RecoveryProfile& profile) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    int t = profile.t();
    RadixDecomposition d{0, std::vector<long long>((std::size_t)t + 1, 0), profile};
    long long rest = m;
    for (int i = 0; i < t; ++i) {
        d.alpha[(std::size_t)i] = rest % profile.sorted()[(std::size_t)i];
        rest /= profile.sorted()[(std::size_t)i];
    }
    long long rt = profile.sorted().back();
    d.alpha[(std::size_t)t] = rest % rt;
    d.beta = rest / rt;
    return d;
}

bool lemma2_check(long long m, const RecoveryProfile& profile) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    int t = profile.t();
    RadixDecomposition d = radix_decompose(m, profile);
    ExpansionTargets e = expansion_targets(profile);

    Rational lhs = Rational(m / profile.prefix_product(t)) * e.e_t * profile.prefix_product(t);
    for (int i = 0; i <= t - 1; ++i)
        lhs += Rational(d.alpha[(std::size_t)i]) * e.e_tilde[(std::size_t)i] *
               profile.prefix_product(i);

    Rational rhs(0);
    for (int i = 0; i <= t; ++i) rhs += Rational(m / profile.prefix_product(i));

    return lhs == rhs;
}

ExpansionTargets expansion_targets(const RecoveryProfile& profile) {
    int t = profile.t();
    ExpansionTargets out;
    out.e_tilde.resize((std::size_t)t + 1);
    Rational acc(1);
    out.e_tilde[0] = acc; // empty sum
    for (int i = 1; i <= t; ++i) {
        acc += Rational(1, profile.prefix_product(i));
        out.e_tilde[(std::size_t)i] = acc;
    }
    out.e_t = acc;
    return out;
}

} // namespace lrca
