#ifndef MANS_CORE_VERIFY_HPP
#define MANS_CORE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/monotone.hpp"

namespace mans::verify {

// Formula-vs-oracle sweeps behind the `verify` CLI command. Each suite walks
// a bounded parameter space, counts every comparison, and keeps the first
// counterexample it sees.

struct SweepResult {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t skipped = 0;  // (m,a) pairs whose oracle space exceeds the gap limit
  std::string first_counterexample;
};

/// All valid (m,a,b,t) tuples with m <= max_m and a <= max_a: t runs over
/// [2, m-1] and b over the exact integer interval carved out by the chain
/// inequality, floor(((t-1)(am+1)-t)/m)+1 .. t*a-1.
std::vector<Mans3Params> admissible_e3_params(std::int64_t max_m, std::int64_t max_a);

/// Closed-form Apery set, Frobenius number, genus, and pseudo-Frobenius set
/// against the definition-level computations on the expanded semigroup.
SweepResult e3_formulas(std::int64_t max_m, std::int64_t max_a);

/// Closed-form pseudo-Frobenius set against the brute-force oracle.
SweepResult pf_vs_oracle(std::int64_t max_m, std::int64_t max_a);

/// Breadth-first tree construction against exhaustive oracle enumeration of
/// each family MA(m, am+1), plus the child-count formula and the successor
/// property at every vertex.
SweepResult tree_vs_oracle(std::int64_t max_m, std::int64_t max_a,
                           std::int64_t max_gaps);

/// Incremental Apery extension along every tree edge against the directly
/// computed table of the child.
SweepResult apery_extend(std::int64_t max_m, std::int64_t max_a,
                         std::int64_t max_gaps);

}  // namespace mans::verify

#endif
