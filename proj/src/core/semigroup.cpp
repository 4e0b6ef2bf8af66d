#include "core/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mans {

namespace {

using i64 = std::int64_t;

// Hard cap on dense reachability tables. Desk-scale inputs need a few
// thousand entries; hitting this means the input asks for arbitrary-precision
// territory and the call must fail loudly instead of thrashing.
constexpr i64 kMaxTableEntries = i64{1} << 26;

// Forward reachability: bits[x] == 1 iff x is a non-negative integer
// combination of `gens`. Classic unbounded coin-style dynamic programming.
std::vector<char> dp_bits(const std::vector<i64>& gens, i64 bound) {
  if (bound < 0) bound = 0;
  if (bound >= kMaxTableEntries)
    fail(Errc::overflow, "membership table would need " +
                             std::to_string(bound + 1) + " entries");
  std::vector<char> bits(static_cast<std::size_t>(bound) + 1, 0);
  bits[0] = 1;
  for (i64 g : gens) {
    for (i64 x = g; x <= bound; ++x)
      if (bits[x - g]) bits[x] = 1;
  }
  return bits;
}

struct Closure {
  i64 frobenius = -1;      // -1 when the semigroup is all of N
  std::vector<char> bits;  // valid on [0, bound]; every x > frobenius is a member
};

// A run of m(S) consecutive members certifies that everything beyond its
// start is a member, which pins down the Frobenius number exactly. The
// Sylvester bound m*r - m - r seeds the table size when the two smallest
// generators are coprime; otherwise (e.g. <4,6,101>) no pairwise formula
// applies and the table doubles until the run shows up.
Closure closure_of(const Generators& s, i64 min_bound) {
  const auto& g = s.elems();
  const i64 m = g.front();
  i64 bound = std::max<i64>({min_bound, checked_mul(2, g.back()), 2});
  if (g.size() >= 2 && std::gcd(g[0], g[1]) == 1)
    bound = std::max(bound, checked_mul(g[1], g[0] - 1));  // F(<n1,n2>) + n1
  for (;;) {
    Closure c;
    c.bits = dp_bits(g, bound);
    i64 run = 0;
    for (i64 x = 0; x <= bound; ++x) {
      run = c.bits[x] ? run + 1 : 0;
      if (run == m) {
        c.frobenius = x - m;
        return c;
      }
    }
    bound = checked_mul(bound, 2);
  }
}

// Is x in the submonoid generated by `gens` (sorted ascending, possibly with
// gcd > 1)? Used during minimality reduction, where the candidate set is not
// yet a numerical semigroup.
bool representable(const std::vector<i64>& gens, i64 x) {
  if (gens.empty()) return x == 0;
  if (gens.size() == 1) return x % gens[0] == 0;
  if (std::gcd(gens[0], gens[1]) == 1) {
    const i64 conductor_bound =
        checked_sub(checked_mul(gens[0], gens[1]), gens[0] + gens[1]);
    if (x > conductor_bound) return true;
  }
  return dp_bits(gens, x)[x] != 0;
}

}  // namespace

const char* irreducibility_name(Irreducibility irr) {
  switch (irr) {
    case Irreducibility::symmetric: return "symmetric";
    case Irreducibility::pseudo_symmetric: return "pseudo_symmetric";
    case Irreducibility::neither: return "neither";
  }
  return "unknown";
}

Generators Generators::from_raw(std::vector<i64> raw) {
  if (raw.empty()) fail(Errc::empty_input, "generator set is empty");
  for (i64 v : raw) {
    if (v < 1)
      fail(Errc::invalid_argument,
           "generators must be positive, got " + std::to_string(v));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (raw.front() == 1) return Generators({1});

  i64 g = 0;
  for (i64 v : raw) g = std::gcd(g, v);
  if (g != 1)
    fail(Errc::gcd_not_one,
         "gcd of generators is " + std::to_string(g) +
             ", so they span a proper submonoid, not a numerical semigroup");

  // An element is a minimal generator iff it is not reachable from the
  // smaller ones; elements dropped earlier are themselves reachable, so
  // testing against the kept prefix is equivalent to testing against all
  // other input elements.
  std::vector<i64> kept;
  for (i64 x : raw) {
    if (!representable(kept, x)) kept.push_back(x);
  }
  return Generators(std::move(kept));
}

std::int64_t Generators::ratio() const {
  if (elems_.size() < 2)
    fail(Errc::invalid_argument,
         "ratio is undefined for a semigroup with a single minimal generator");
  return elems_[1];
}

bool AperyTable::monotone() const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] >= w[i + 1]) return false;
  return true;
}

bool contains(const Generators& s, i64 x) {
  if (x < 0) return false;
  if (x == 0) return true;
  if (s.is_naturals()) return true;
  const Closure c = closure_of(s, 0);
  return x > c.frobenius || c.bits[x] != 0;
}

AperyTable apery_set(const Generators& s, i64 modulus) {
  if (modulus < 1)
    fail(Errc::modulus_not_in_semigroup,
         std::to_string(modulus) + " is not a nonzero member of the semigroup");
  if (modulus >= kMaxTableEntries)
    fail(Errc::overflow, "Apery table would need " + std::to_string(modulus) +
                             " entries");
  const Closure c = closure_of(s, 0);
  const auto member = [&](i64 x) { return x > c.frobenius || c.bits[x] != 0; };
  if (!member(modulus))
    fail(Errc::modulus_not_in_semigroup,
         std::to_string(modulus) + " is not a member of the semigroup");

  // Every residue class has a member at or below F + modulus, since the
  // stretch (F, F + modulus] consists of members covering all classes.
  AperyTable table;
  table.modulus = modulus;
  table.w.assign(static_cast<std::size_t>(modulus), -1);
  i64 filled = 0;
  for (i64 x = 0; filled < modulus; ++x) {
    i64& slot = table.w[static_cast<std::size_t>(x % modulus)];
    if (slot < 0 && member(x)) {
      slot = x;
      ++filled;
    }
  }
  return table;
}

i64 frobenius(const Generators& s) {
  const AperyTable ap = apery_set(s, s.multiplicity());
  const i64 top = *std::max_element(ap.w.begin(), ap.w.end());
  return checked_sub(top, ap.modulus);
}

i64 genus(const Generators& s) {
  const AperyTable ap = apery_set(s, s.multiplicity());
  i64 sum = 0;
  for (i64 v : ap.w) sum = checked_add(sum, v);
  const i64 n = ap.modulus;
  const i64 num = checked_sub(checked_mul(2, sum), checked_mul(n, n - 1));
  if (num % (2 * n) != 0)
    fail(Errc::internal, "Apery-sum genus is not an integer");
  return num / (2 * n);
}

PartialOrderWitness order_le(const Generators& s, i64 a, i64 b) {
  return {a, b, contains(s, checked_sub(b, a))};
}

std::vector<i64> maximals_under_order(const Generators& s, const AperyTable& ap) {
  if (apery_set(s, ap.modulus) != ap)
    fail(Errc::invalid_argument,
         "table is not the Apery set of the semigroup at modulus " +
             std::to_string(ap.modulus));
  const Closure c = closure_of(s, 0);
  const auto member = [&](i64 x) {
    return x >= 0 && (x > c.frobenius || c.bits[x] != 0);
  };
  std::vector<i64> out;
  for (i64 w : ap.w) {
    bool maximal = true;
    for (i64 other : ap.w) {
      if (other != w && member(other - w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> pseudo_frobenius(const Generators& s) {
  if (s.is_naturals()) return {};
  const AperyTable ap = apery_set(s, s.multiplicity());
  std::vector<i64> pf = maximals_under_order(s, ap);
  for (i64& v : pf) v = checked_sub(v, ap.modulus);
  return pf;
}

i64 type_of(const Generators& s) {
  if (s.is_naturals())
    fail(Errc::undefined_for_naturals,
         "the type is undefined for the semigroup of all non-negative integers");
  return static_cast<i64>(pseudo_frobenius(s).size());
}

Irreducibility classify_irreducible(const Generators& s) {
  if (s.is_naturals())
    fail(Errc::undefined_for_naturals,
         "irreducibility is undefined for the semigroup of all non-negative integers");
  const i64 f = frobenius(s);
  const i64 g = genus(s);
  const std::vector<i64> pf = pseudo_frobenius(s);

  const bool sym_formula = f == 2 * g - 1;
  const bool psym_formula = f == 2 * g - 2;
  const bool sym_pf = pf.size() == 1 && pf[0] == f;
  const bool psym_pf = pf.size() == 2 && 2 * pf[0] == f && pf[1] == f;
  if (sym_formula != sym_pf || psym_formula != psym_pf)
    fail(Errc::internal, "irreducibility criteria disagree");

  if (sym_formula) return Irreducibility::symmetric;
  if (psym_formula) return Irreducibility::pseudo_symmetric;
  return Irreducibility::neither;
}

}  // namespace mans
