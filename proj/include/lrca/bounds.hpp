#pragma once

#include <boost/rational.hpp>
#include <map>
#include <vector>

namespace lrca {

using Rational = boost::rational<long long>;

// Recovering-set size caps (r_1, ..., r_t), canonicalized to ascending order;
// the order the caller gave is kept alongside.
class RecoveryProfile {
  public:
    explicit RecoveryProfile(std::vector<int> rs);

    int t() const { return (int)sorted_.size(); }
    const std::vector<int>& sorted() const { return sorted_; }
    const std::vector<int>& as_given() const { return given_; }

    // prod_{j <= i} r_j over the sorted profile; i = 0 gives 1.
    long long prefix_product(int i) const;

  private:
    std::vector<int> sorted_;
    std::vector<int> given_;
};

// Unequal-locality census: counts[j] = number of information coordinates with
// locality j (and availability t each).
struct LocalityProfile {
    std::map<int, long long> counts;
    int t = 1;

    LocalityProfile(std::map<int, long long> counts, int t);
    long long k() const;
    int r_max() const;
};

struct RadixDecomposition {
    long long beta = 0;
    std::vector<long long> alpha; // alpha_0 ... alpha_t
    RecoveryProfile profile;

    long long reconstruct() const;
};

// d <= n - k - ceil((t(k-1)+1)/(t(r-1)+1)) + 2   (information locality)
long long bound_eq1(long long n, long long k, int r, int t);

// d <= n - sum_{i=0}^{t} floor((k-1)/r^i)        (all-symbol locality)
long long bound_eq2(long long n, long long k, int r, int t);

// Irregular-profile information-locality bound; equals bound_eq1 for
// constant profiles.
long long bound_thm1(long long n, long long k, const RecoveryProfile& profile);

// Irregular-profile all-symbol bound; equals bound_eq2 for constant profiles.
long long bound_thm2(long long n, long long k, const RecoveryProfile& profile);

// Unequal-locality information bound; equals bound_eq1 when all mass sits at
// one locality.
long long bound_thm3(long long n, const LocalityProfile& profile);

// Column-independence threshold: gamma + 1 == bound_eq1 identically.
long long gamma_threshold(long long n, long long k, int r, int t);

// Formula values above the Singleton bound are clipped here, not in the
// formulas themselves.
long long effective_bound(long long raw, long long n, long long k);

// Unique digits of m in the unequal radix {1, r_1, r_1 r_2, ...}.
RadixDecomposition radix_decompose(long long m, const RecoveryProfile& profile);

// Exact check of the unequal-radix floor identity.
bool lemma2_check(long long m, const RecoveryProfile& profile);

// e~_i = 1 + sum_{j<=i} 1/(r_1...r_j); e_t is the last entry.
struct ExpansionTargets {
    Rational e_t;
    std::vector<Rational> e_tilde; // e~_0 .. e~_t
};
ExpansionTargets expansion_targets(const RecoveryProfile& profile);

} // namespace lrca
