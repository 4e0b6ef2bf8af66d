#ifndef MANS_CORE_MONOTONE_HPP
#define MANS_CORE_MONOTONE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core/semigroup.hpp"

namespace mans {

// A semigroup has a monotone Apery set (is a MANS-semigroup) when
// Ap(S, m(S)) is strictly increasing in the residue index:
// w(1) < w(2) < ... < w(m-1).

/// Outcome of the definition-level monotonicity check.
struct MansCheckReport {
  bool is_mans = false;
  /// Least index i with w(i) >= w(i+1); empty when the table is monotone.
  std::optional<std::int64_t> failing_index;
  /// The a with r(S) = a*m(S) + 1, when the ratio has that form. A missing
  /// value on a semigroup with two or more generators is itself a
  /// monotonicity violation.
  std::optional<std::int64_t> ratio_coefficient;
};

/// Definition-level check: scans Ap(S, m(S)) for monotonicity. The full
/// semigroup of non-negative integers passes vacuously.
MansCheckReport is_mans(const Generators& s);

/// Necessary condition: the minimal-generator residues mod the multiplicity
/// are strictly increasing. Vacuously true below two generators.
bool residues_monotone(const Generators& s);

/// Two-generator case, where the necessary ratio form is also sufficient:
/// <n1,n2> is MANS iff n2 == 1 (mod n1). Requires gcd(n1,n2) = 1.
bool is_mans_dim2(std::int64_t n1, std::int64_t n2);

/// Recursive characterisation: peel the greatest generator, require the rest
/// to be MANS, and check the residue/window conditions for the peeled
/// generator; at the base, apply the two-generator criterion. Agrees with
/// is_mans on every input.
bool is_mans_recursive(const Generators& s);

/// Parameters of the three-generator family <m, a*m+1, b*m+t>. Valid tuples
/// satisfy m >= 3, a >= 1, b >= 1, 2 <= t <= m-1 and the chain
/// (t-1)(am+1) < bm+t < t(am+1); q and r are the derived quotient and
/// remainder of (m-1)/t.
struct Mans3Params {
  std::int64_t m = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t t = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;

  static Mans3Params create(std::int64_t m, std::int64_t a, std::int64_t b,
                            std::int64_t t);

  std::int64_t n2() const { return a * m + 1; }  // the ratio
  std::int64_t n3() const { return b * m + t; }  // the greatest generator
};

/// Extracts (m,a,b,t,q,r) from a three-generator semigroup; fails with
/// not_mans when the ratio is not a*m+1 or the chain inequality is violated.
/// Among three-generator semigroups, those two conditions hold exactly for
/// the ones with a monotone Apery set.
Mans3Params mans3_params(const Generators& s);

/// Expands parameters back into the semigroup <m, am+1, bm+t>.
Generators mans3_from_params(const Mans3Params& p);

/// Closed-form Apery set: w(i) = (i/t)(bm+t) + (i mod t)(am+1).
AperyTable mans3_apery(const Mans3Params& p);

/// Closed-form Frobenius number r(am+1) + q(bm+t) - m.
std::int64_t mans3_frobenius(const Mans3Params& p);

/// Genus via the Apery-sum form, cross-checked against the rewritten form
/// (qt(t-1)+r(r+1))a/2 + (qt(q-1)+2q(r+1))b/2; disagreement or a non-exact
/// division reports formula_mismatch.
std::int64_t mans3_genus(const Mans3Params& p);

/// {q(bm+t)+r(am+1)-m} when t divides m, otherwise that value together with
/// (q-1)(bm+t)+(t-1)(am+1)-m.
std::vector<std::int64_t> mans3_pseudo_frobenius(const Mans3Params& p);

/// Type one, i.e. symmetric, iff t divides m.
bool mans3_is_symmetric(const Mans3Params& p);

/// Pseudo-symmetric iff 2t = m+1 and ta - b = 1.
bool mans3_is_pseudo_symmetric(const Mans3Params& p);

/// Apery set of the semigroup extended by a suitably monotone generator
/// n_new, computed from the old table alone by layered minima
/// w'(i) = min_k { k*n_new + w(i - k*t) } with k <= (n1-1)/t. The
/// precondition (n_new above the greatest generator, with a larger residue,
/// inside the window (w(t-1), w(t))) is checked here and fails fast.
AperyTable extend_apery(const AperyTable& ap, std::int64_t n_new);

/// Full invariant bundle for one semigroup. For <1> the conventions are
/// F = -1, g = 0, PF empty, type 0, symmetric (F = 2g - 1 holds literally).
Profile make_profile(const Generators& s);

}  // namespace mans

#endif
