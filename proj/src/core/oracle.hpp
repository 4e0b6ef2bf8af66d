#ifndef MANS_CORE_ORACLE_HPP
#define MANS_CORE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "core/semigroup.hpp"

namespace mans::oracle {

// Brute-force reference implementations used by property tests and the
// `verify` command. Everything here works straight from the definitions and
// stays independent of the closed-form paths in monotone.hpp / tree.hpp.

/// Dense reachability table: bits[x] == 1 iff x is a non-negative integer
/// combination of the generators.
struct MembershipTable {
  std::int64_t bound = 0;
  std::vector<char> bits;
};

MembershipTable oracle_membership(const std::vector<std::int64_t>& gens,
                                  std::int64_t bound);

/// The full (finite) gap set, found by scanning the membership table.
std::vector<std::int64_t> oracle_gaps(const std::vector<std::int64_t>& gens);

/// Pseudo-Frobenius numbers by direct test: gaps x with x + g a member for
/// every generator g.
std::vector<std::int64_t> oracle_pf(const std::vector<std::int64_t>& gens);

/// Every semigroup with monotone Apery set, multiplicity m, and ratio r,
/// found by exhaustive search over the additively closed supersets of <m,r>
/// (depth-first over the gap subsets above r, propagating forced sums).
/// Fails with search_space_too_large when <m,r> has more than
/// `max_gap_count` gaps.
std::vector<Generators> oracle_enumerate_MA(std::int64_t m, std::int64_t r,
                                            std::int64_t max_gap_count = 24);

}  // namespace mans::oracle

#endif
