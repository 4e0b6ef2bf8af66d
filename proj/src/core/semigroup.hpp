#ifndef MANS_CORE_SEMIGROUP_HPP
#define MANS_CORE_SEMIGROUP_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace mans {

enum class Irreducibility { symmetric, pseudo_symmetric, neither };

const char* irreducibility_name(Irreducibility irr);

/// Canonical minimal generating set of a numerical semigroup, sorted
/// ascending. Instances are built through from_raw(), which reduces the input
/// to the unique minimal system, so every object satisfies: gcd of the
/// elements is 1, no element is a non-negative combination of the others, and
/// the number of elements never exceeds the smallest one.
class Generators {
 public:
  /// Reduces an arbitrary generating set (gcd 1, positive values) to the
  /// minimal system of generators of the semigroup it spans. Idempotent.
  static Generators from_raw(std::vector<std::int64_t> raw);

  const std::vector<std::int64_t>& elems() const { return elems_; }
  std::size_t embedding_dim() const { return elems_.size(); }
  std::int64_t multiplicity() const { return elems_.front(); }
  std::int64_t max_generator() const { return elems_.back(); }
  std::int64_t ratio() const;  // second-smallest minimal generator

  bool is_naturals() const { return elems_.size() == 1 && elems_[0] == 1; }

  friend auto operator<=>(const Generators&, const Generators&) = default;

 private:
  explicit Generators(std::vector<std::int64_t> elems)
      : elems_(std::move(elems)) {}

  std::vector<std::int64_t> elems_;
};

/// Apery set of a semigroup with respect to `modulus`: w[i] is the least
/// member congruent with i mod `modulus`. Invariants: w[0] = 0, w[i] == i
/// (mod modulus), w[i] is a member while w[i] - modulus is not.
struct AperyTable {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> w = {0};

  /// True when the entries are strictly increasing in the residue index.
  bool monotone() const;

  friend bool operator==(const AperyTable&, const AperyTable&) = default;
};

/// Witness for the partial order a <=_S b, which holds iff b - a lies in S.
struct PartialOrderWitness {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool difference_in_S = false;
};

/// Invariant bundle computed by make_profile() (see monotone.hpp).
struct Profile {
  Generators generators;
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
  std::vector<std::int64_t> pf;
  std::int64_t type_count = 0;  // |pf|
  bool is_mans = false;
  Irreducibility irreducibility = Irreducibility::symmetric;
};

/// Membership test; negative integers are never members, 0 always is.
bool contains(const Generators& s, std::int64_t x);

/// Apery set of `s` with respect to `modulus`, which must be a nonzero
/// member of the semigroup.
AperyTable apery_set(const Generators& s, std::int64_t modulus);

/// Largest integer outside the semigroup; -1 for the full set of
/// non-negative integers. Computed as max(Ap(S, m)) - m.
std::int64_t frobenius(const Generators& s);

/// Number of gaps, via the Apery-sum identity (the division is exact).
std::int64_t genus(const Generators& s);

PartialOrderWitness order_le(const Generators& s, std::int64_t a, std::int64_t b);

/// Elements of `ap` that are maximal under <=_S. `ap` must be the Apery set
/// of `s` with respect to its own modulus.
std::vector<std::int64_t> maximals_under_order(const Generators& s, const AperyTable& ap);

/// Pseudo-Frobenius numbers: maximals of Ap(S, m) shifted down by m.
/// Returns the empty set for the full semigroup of non-negative integers.
std::vector<std::int64_t> pseudo_frobenius(const Generators& s);

/// Cardinality of the pseudo-Frobenius set. Undefined for <1>.
std::int64_t type_of(const Generators& s);

/// symmetric iff F = 2g - 1, pseudo_symmetric iff F = 2g - 2; both are
/// cross-checked against the equivalent pseudo-Frobenius criteria.
/// Undefined for <1>.
Irreducibility classify_irreducible(const Generators& s);

}  // namespace mans

#endif
