#include "core/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace mans::oracle {

namespace {

using i64 = std::int64_t;

constexpr i64 kMaxTableEntries = i64{1} << 26;

void validate_gens(const std::vector<i64>& gens) {
  if (gens.empty()) fail(Errc::empty_input, "generator set is empty");
  for (i64 v : gens)
    if (v < 1)
      fail(Errc::invalid_argument,
           "generators must be positive, got " + std::to_string(v));
}

i64 gcd_all(const std::vector<i64>& gens) {
  i64 g = 0;
  for (i64 v : gens) g = std::gcd(g, v);
  return g;
}

// Smallest x such that x..x+m-1 are all members, i.e. the conductor F + 1.
// Returns -1 if no such run exists within the table.
i64 find_conductor(const std::vector<char>& bits, i64 m) {
  i64 run = 0;
  for (i64 x = 0; x < static_cast<i64>(bits.size()); ++x) {
    run = bits[x] ? run + 1 : 0;
    if (run == m) return x - m + 1;
  }
  return -1;
}

}  // namespace

MembershipTable oracle_membership(const std::vector<i64>& gens, i64 bound) {
  validate_gens(gens);
  const i64 largest = *std::max_element(gens.begin(), gens.end());
  if (bound < largest)
    fail(Errc::invalid_argument, "bound must be at least the largest generator");
  if (bound >= kMaxTableEntries)
    fail(Errc::overflow, "membership table would need " +
                             std::to_string(bound + 1) + " entries");
  MembershipTable table;
  table.bound = bound;
  table.bits.assign(static_cast<std::size_t>(bound) + 1, 0);
  table.bits[0] = 1;
  for (i64 x = 1; x <= bound; ++x) {
    for (i64 g : gens) {
      if (g <= x && table.bits[x - g]) {
        table.bits[x] = 1;
        break;
      }
    }
  }
  return table;
}

std::vector<i64> oracle_gaps(const std::vector<i64>& gens) {
  validate_gens(gens);
  if (gcd_all(gens) != 1)
    fail(Errc::gcd_not_one, "gap set is infinite unless the gcd is 1");
  const i64 m = *std::min_element(gens.begin(), gens.end());
  i64 bound = checked_mul(*std::max_element(gens.begin(), gens.end()), 2);
  for (;;) {
    const MembershipTable table = oracle_membership(gens, bound);
    const i64 conductor = find_conductor(table.bits, m);
    if (conductor >= 0) {
      std::vector<i64> gaps;
      for (i64 x = 1; x < conductor; ++x)
        if (!table.bits[x]) gaps.push_back(x);
      return gaps;
    }
    bound = checked_mul(bound, 2);
  }
}

std::vector<i64> oracle_pf(const std::vector<i64>& gens) {
  const std::vector<i64> gaps = oracle_gaps(gens);
  if (gaps.empty()) return {};
  const i64 frob = gaps.back();
  const i64 largest = *std::max_element(gens.begin(), gens.end());
  const MembershipTable table = oracle_membership(gens, checked_add(frob, largest));
  const auto member = [&](i64 x) { return x > frob || table.bits[x] != 0; };
  // x + s in S for every nonzero member s reduces to checking the generators.
  std::vector<i64> pf;
  for (i64 x : gaps) {
    bool all = true;
    for (i64 g : gens) {
      if (!member(x + g)) {
        all = false;
        break;
      }
    }
    if (all) pf.push_back(x);
  }
  return pf;
}

std::vector<Generators> oracle_enumerate_MA(i64 m, i64 r, i64 max_gap_count) {
  if (m < 2) fail(Errc::invalid_argument, "multiplicity must be at least 2");
  if (r <= m) fail(Errc::invalid_argument, "ratio must exceed the multiplicity");
  if (std::gcd(m, r) != 1)
    fail(Errc::gcd_not_one, "multiplicity and ratio must be coprime");

  std::vector<Generators> found;
  if (r % m != 1) return found;  // the ratio of any such semigroup is 1 mod m

  const i64 frob0 = checked_sub(checked_mul(m, r), checked_add(m, r));
  const i64 gap_count = (m - 1) * (r - 1) / 2;
  if (gap_count > max_gap_count)
    fail(Errc::search_space_too_large,
         "<" + std::to_string(m) + "," + std::to_string(r) + "> has " +
             std::to_string(gap_count) + " gaps, above the configured limit of " +
             std::to_string(max_gap_count));

  // Member set of the candidate semigroup, mutated during the search.
  // Everything above frob0 is a member of <m,r> and stays a member. The
  // table must still reach r, which sits above frob0 when m = 2.
  std::vector<char> in_s = oracle_membership({m, r}, std::max(frob0, r)).bits;
  const auto member = [&](i64 x) { return x > frob0 || in_s[x] != 0; };

  // Adjoinable values: gaps of <m,r> above r. Values below r would change
  // the multiplicity or the ratio; multiples of m are never gaps.
  std::vector<i64> candidates;
  for (i64 x = r + 1; x <= frob0; ++x)
    if (!in_s[x]) candidates.push_back(x);

  // forced[x] counts the inclusion constraints currently hitting x: once a
  // value c joins, every sum c + s landing on a gap must join later too.
  std::vector<int> forced(static_cast<std::size_t>(frob0) + 1, 0);

  const auto record = [&]() {
    // Monotone-Apery test straight from the definition.
    std::vector<i64> w(static_cast<std::size_t>(m), -1);
    i64 filled = 0;
    for (i64 x = 0; filled < m; ++x) {
      i64& slot = w[static_cast<std::size_t>(x % m)];
      if (slot < 0 && member(x)) {
        slot = x;
        ++filled;
      }
    }
    for (i64 i = 0; i + 1 < m; ++i)
      if (w[i] >= w[i + 1]) return;

    // Minimal generators: nonzero members that are not a sum of two nonzero
    // members. All of them lie at or below frob0 + m.
    std::vector<i64> msg;
    for (i64 x = m; x <= frob0 + m; ++x) {
      if (!member(x)) continue;
      bool decomposable = false;
      for (i64 y = m; y + m <= x; ++y) {
        if (member(y) && member(x - y)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) msg.push_back(x);
    }
    found.push_back(Generators::from_raw(msg));
  };

  std::function<void(std::size_t)> search = [&](std::size_t idx) {
    if (idx == candidates.size()) {
      record();
      return;
    }
    const i64 c = candidates[idx];
    if (forced[c] == 0) search(idx + 1);  // leave c out

    // Bring c in and propagate the sums it now owes.
    in_s[c] = 1;
    std::vector<i64> bumped;
    for (i64 x = m; x + c <= frob0; ++x) {
      if (in_s[x] && !in_s[x + c]) {
        ++forced[x + c];
        bumped.push_back(x + c);
      }
    }
    search(idx + 1);
    for (i64 s : bumped) --forced[s];
    in_s[c] = 0;
  };

  search(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace mans::oracle
