#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrca/codes.hpp"

namespace lrca::cli {

struct Options {
    bool json = false;
    unsigned long long budget_codewords = 100000000ULL; // codeword evaluations
    unsigned long long budget_subsets = 1000000ULL;     // subset rank checks
    bool extended = false;
    unsigned long long seed = 1;
    int ranges = 0; // 0 = pick from hardware concurrency
};

// The built-in presets: 1 = the (16,k,3,2) code over GF(16), 2 = the
// (12,4) code over GF(13) with profile (3,2), 3 = the (32,8) code over GF(32)
// with profile (7,3).
EvaluationCode example_code(int which, std::optional<int> max_degree = std::nullopt);

int cmd_construct_tamo_barg(int example, std::optional<int> max_degree,
                            const std::string& out_path, const Options& opt, std::ostream& os);
int cmd_construct_c1(std::uint32_t p, std::uint32_t l, std::uint32_t t,
                     const std::string& out_path, const Options& opt, std::ostream& os);
int cmd_construct_c2(std::uint32_t q, int r, int t, int v, int k, std::optional<int> m,
                     const std::string& out_path, const Options& opt, std::ostream& os);
int cmd_bounds(long long n, long long k, std::optional<int> r, std::optional<int> t,
               const std::vector<int>& profile, const std::map<int, long long>& locality,
               const Options& opt, std::ostream& os);
int cmd_verify(const std::string& path, const Options& opt, std::ostream& os);
int cmd_table1(const Options& opt, std::ostream& os);
int cmd_examples(const Options& opt, std::ostream& os);

} // namespace lrca::cli
