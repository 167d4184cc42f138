#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrca/codes.hpp"
#include "lrca/graph.hpp"

namespace lrca {

// Outcome of a budgeted enumeration. A missing value with budget_exceeded set
// mirrors a computation that was not run to completion; it is not an error.
struct EnumResult {
    std::optional<long long> value;
    unsigned long long enumerated = 0;
    bool budget_exceeded = false;
};

struct DistanceReport {
    long long n = 0, k = 0;
    std::optional<long long> exact;
    std::optional<long long> lb_degree;
    std::optional<long long> lb_gcd;
    std::vector<std::pair<std::string, long long>> upper_bounds;
    std::string method;
    unsigned long long enumerated = 0;
    bool budget_exceeded = false;

    std::optional<long long> best_upper_bound() const;
};

struct AlgoStep {
    std::size_t iteration = 0;
    std::size_t j = 0;
    int case_taken = 1;
    int a = -1;                      // case 2 only
    std::vector<std::size_t> added;  // coordinates newly added to S
    std::size_t rank_after = 0;
};

struct RankSet {
    std::vector<std::size_t> coords; // sorted
    std::size_t rank = 0;
    std::vector<AlgoStep> trace;
};

// Dimension of the code restricted to the given coordinates.
std::size_t rank_of(const Matrix& generator, const std::vector<std::size_t>& coords);

// Exact minimum distance by full message enumeration. Evaluation codes count
// evaluation-point roots of the message polynomial; parity-check codes count
// nonzero entries of message * G. The index space is split into `ranges`
// disjoint chunks combined by minimum (0 = pick automatically).
EnumResult min_distance_exhaustive(const EvaluationCode& code, unsigned long long budget,
                                   int ranges = 0);
EnumResult min_distance_exhaustive(const ParityCheckCode& code, unsigned long long budget,
                                   int ranges = 0);

// n minus the top basis degree.
long long distance_lb_degree(const EvaluationCode& code);

// n - max over nonzero message polynomials f of deg gcd(f, prod(x - a)).
// The gcd degree is invariant under scaling f, so one representative per
// projective message class is enumerated; the budget still gates on q^k.
EnumResult distance_lb_gcd(const EvaluationCode& code, unsigned long long budget,
                           int ranges = 0);

// Distance reports with the applicable closed-form upper bounds attached.
DistanceReport distance_report(const EvaluationCode& code, unsigned long long budget,
                               bool with_gcd = true, int ranges = 0);
DistanceReport distance_report(const ParityCheckCode& code, unsigned long long budget,
                               int ranges = 0);

// True iff every column lies in the span of each of its recovering sets.
bool verify_recovering_sets(const Matrix& generator, const RecoveringGraph& graph);
bool verify_recovering_sets(const EvaluationCode& code, const RecoveringGraph& graph);

// Greedy search for t pairwise disjoint recovering sets per coordinate with
// |R_j| <= caps[j], enumerating candidate supports by size then
// lexicographically. Throws when the subset budget runs out or no assignment
// exists.
RecoveringGraph discover_recovering_sets(const Matrix& generator, std::vector<int> caps,
                                         unsigned long long subset_budget = 1000000);

// Every Gamma-subset of H's columns has full rank; nullopt if C(n, Gamma)
// exceeds the subset budget.
std::optional<bool> check_gamma_columns(const ParityCheckCode& code,
                                        unsigned long long subset_budget = 1000000);

// Coordinate selection policy; receives the coordinates not yet in S.
using Chooser = std::function<std::size_t(const std::vector<std::size_t>&)>;

// Builds S with rank(S) = k-1 by absorbing recovering-set unions, hence
// d <= n - |S|. The default policy picks the lowest-index coordinate.
RankSet algorithm1(const Matrix& generator, const RecoveringGraph& graph,
                   const Chooser& chooser = {});

// Same loop with the minimal-locality selection rule.
RankSet algorithm2(const Matrix& generator, const RecoveringGraph& graph,
                   const std::vector<int>& localities);

unsigned long long pow_saturating(unsigned long long base, unsigned exp);

} // namespace lrca
