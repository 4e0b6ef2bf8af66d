#include "core/monotone.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mans {

namespace {

using i64 = std::int64_t;

std::string params_str(const Mans3Params& p) {
  return "(m=" + std::to_string(p.m) + ", a=" + std::to_string(p.a) +
         ", b=" + std::to_string(p.b) + ", t=" + std::to_string(p.t) + ")";
}

}  // namespace

MansCheckReport is_mans(const Generators& s) {
  const AperyTable ap = apery_set(s, s.multiplicity());
  MansCheckReport report;
  report.is_mans = true;
  for (std::size_t i = 0; i + 1 < ap.w.size(); ++i) {
    if (ap.w[i] >= ap.w[i + 1]) {
      report.is_mans = false;
      report.failing_index = static_cast<i64>(i);
      break;
    }
  }
  if (s.embedding_dim() >= 2) {
    const i64 m = s.multiplicity();
    const i64 r = s.ratio();
    if ((r - 1) % m == 0) report.ratio_coefficient = (r - 1) / m;
  }
  return report;
}

bool residues_monotone(const Generators& s) {
  const auto& g = s.elems();
  const i64 m = g.front();
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    if (g[i] % m >= g[i + 1] % m) return false;
  return true;
}

bool is_mans_dim2(i64 n1, i64 n2) {
  if (n1 < 2 || n2 <= n1)
    fail(Errc::invalid_argument, "need 2 <= n1 < n2");
  if (std::gcd(n1, n2) != 1)
    fail(Errc::gcd_not_one, "<n1,n2> is a numerical semigroup only when coprime");
  return (n2 - 1) % n1 == 0;
}

bool is_mans_recursive(const Generators& s) {
  const auto& g = s.elems();
  if (g.size() <= 1) return true;
  if (g.size() == 2) return (g[1] - 1) % g[0] == 0;

  // Peel the greatest generator. A prefix with gcd above 1 spans no
  // numerical semigroup at all; the ratio would then share a factor with the
  // multiplicity and could never be 1 mod it, so S cannot be MANS.
  std::vector<i64> head(g.begin(), g.end() - 1);
  i64 head_gcd = 0;
  for (i64 v : head) head_gcd = std::gcd(head_gcd, v);
  if (head_gcd != 1) return false;

  // The remaining list must itself be a minimal system; re-reduce instead of
  // assuming so.
  const Generators peeled = Generators::from_raw(head);
  if (peeled.elems() != head)
    fail(Errc::internal, "peeled generator list is not minimal");
  if (!is_mans_recursive(peeled)) return false;

  const i64 m = g.front();
  const i64 last = g.back();
  const i64 prev = g[g.size() - 2];
  if (prev % m >= last % m) return false;

  const AperyTable ap = apery_set(peeled, m);
  const i64 t = last % m;
  return ap.w[t - 1] < last && last < ap.w[t];
}

Mans3Params Mans3Params::create(i64 m, i64 a, i64 b, i64 t) {
  Mans3Params p;
  p.m = m;
  p.a = a;
  p.b = b;
  p.t = t;
  if (m < 3) fail(Errc::invalid_params, "need m >= 3, got m=" + std::to_string(m));
  if (a < 1) fail(Errc::invalid_params, "need a >= 1, got a=" + std::to_string(a));
  if (b < 1) fail(Errc::invalid_params, "need b >= 1, got b=" + std::to_string(b));
  if (t < 2 || t > m - 1)
    fail(Errc::invalid_params,
         "need 2 <= t <= m-1, got t=" + std::to_string(t) + " with m=" + std::to_string(m));
  const i64 n2 = checked_add(checked_mul(a, m), 1);
  const i64 n3 = checked_add(checked_mul(b, m), t);
  if (!(checked_mul(t - 1, n2) < n3 && n3 < checked_mul(t, n2)))
    fail(Errc::invalid_params,
         "chain (t-1)(am+1) < bm+t < t(am+1) fails for " + params_str(p));
  p.q = (m - 1) / t;
  p.r = (m - 1) % t;
  return p;
}

Mans3Params mans3_params(const Generators& s) {
  if (s.embedding_dim() != 3)
    fail(Errc::not_embedding_dim_3,
         "expected exactly three minimal generators, got " +
             std::to_string(s.embedding_dim()));
  const auto& g = s.elems();
  const i64 m = g[0];
  if ((g[1] - 1) % m != 0)
    fail(Errc::not_mans,
         "ratio " + std::to_string(g[1]) + " is not of the form a*" +
             std::to_string(m) + "+1");
  const i64 a = (g[1] - 1) / m;
  const i64 t = g[2] % m;
  if (t < 2 || t > m - 1)
    fail(Errc::not_mans,
         "greatest generator residue " + std::to_string(t) + " is out of range");
  const i64 b = (g[2] - t) / m;
  if (!(checked_mul(t - 1, g[1]) < g[2] && g[2] < checked_mul(t, g[1])))
    fail(Errc::not_mans,
         "chain (t-1)(am+1) < bm+t < t(am+1) fails for <" + std::to_string(m) +
             "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ">");
  return Mans3Params::create(m, a, b, t);
}

Generators mans3_from_params(const Mans3Params& p) {
  const Mans3Params checked = Mans3Params::create(p.m, p.a, p.b, p.t);
  return Generators::from_raw({checked.m, checked.n2(), checked.n3()});
}

AperyTable mans3_apery(const Mans3Params& p) {
  const Mans3Params v = Mans3Params::create(p.m, p.a, p.b, p.t);
  AperyTable table;
  table.modulus = v.m;
  table.w.resize(static_cast<std::size_t>(v.m));
  for (i64 i = 0; i < v.m; ++i) {
    table.w[i] = checked_add(checked_mul(i / v.t, v.n3()),
                             checked_mul(i % v.t, v.n2()));
  }
  return table;
}

i64 mans3_frobenius(const Mans3Params& p) {
  const Mans3Params v = Mans3Params::create(p.m, p.a, p.b, p.t);
  return checked_sub(
      checked_add(checked_mul(v.r, v.n2()), checked_mul(v.q, v.n3())), v.m);
}

i64 mans3_genus(const Mans3Params& p) {
  const Mans3Params v = Mans3Params::create(p.m, p.a, p.b, p.t);
  // Coefficients shared by both published forms.
  const i64 A = checked_add(checked_mul(checked_mul(v.q, v.t), v.t - 1),
                            checked_mul(v.r, v.r + 1));
  const i64 B = checked_add(checked_mul(checked_mul(v.q, v.t), v.q - 1),
                            checked_mul(2 * v.q, v.r + 1));

  // Apery-sum form: (A(am+1) + B(bm+t)) / 2m - (m-1)/2, as one exact division.
  const i64 num = checked_sub(
      checked_add(checked_mul(A, v.n2()), checked_mul(B, v.n3())),
      checked_mul(v.m, v.m - 1));
  if (num % (2 * v.m) != 0)
    fail(Errc::formula_mismatch,
         "Apery-sum genus is not an integer for " + params_str(v));
  const i64 apery_form = num / (2 * v.m);

  // Rewritten form: (A*a + B*b) / 2.
  const i64 num2 = checked_add(checked_mul(A, v.a), checked_mul(B, v.b));
  if (num2 % 2 != 0)
    fail(Errc::formula_mismatch,
         "rewritten genus is not an integer for " + params_str(v));
  const i64 rewritten_form = num2 / 2;

  if (apery_form != rewritten_form)
    fail(Errc::formula_mismatch,
         "genus forms disagree for " + params_str(v) + ": " +
             std::to_string(apery_form) + " vs " + std::to_string(rewritten_form));
  return apery_form;
}

std::vector<i64> mans3_pseudo_frobenius(const Mans3Params& p) {
  const Mans3Params v = Mans3Params::create(p.m, p.a, p.b, p.t);
  const i64 high = checked_sub(
      checked_add(checked_mul(v.q, v.n3()), checked_mul(v.r, v.n2())), v.m);
  if (v.m % v.t == 0) return {high};
  const i64 low = checked_sub(
      checked_add(checked_mul(v.q - 1, v.n3()), checked_mul(v.t - 1, v.n2())),
      v.m);
  return {low, high};
}

bool mans3_is_symmetric(const Mans3Params& p) {
  const Mans3Params v = Mans3Params::create(p.m, p.a, p.b, p.t);
  return v.m % v.t == 0;
}

bool mans3_is_pseudo_symmetric(const Mans3Params& p) {
  const Mans3Params v = Mans3Params::create(p.m, p.a, p.b, p.t);
  return 2 * v.t == v.m + 1 && checked_mul(v.t, v.a) - v.b == 1;
}

AperyTable extend_apery(const AperyTable& ap, i64 n_new) {
  const i64 n1 = ap.modulus;
  if (n1 < 1 || static_cast<i64>(ap.w.size()) != n1)
    fail(Errc::invalid_argument, "malformed Apery table");
  if (ap.w[0] != 0)
    fail(Errc::invalid_argument, "Apery table must start with w(0) = 0");
  for (i64 i = 0; i < n1; ++i) {
    if (ap.w[i] < 0 || ap.w[i] % n1 != i)
      fail(Errc::invalid_argument,
           "entry " + std::to_string(ap.w[i]) + " is not congruent with " +
               std::to_string(i) + " mod " + std::to_string(n1));
  }
  if (n_new < 1) fail(Errc::invalid_argument, "new generator must be positive");

  // The table determines its semigroup: reconstruct it and insist the input
  // really is that semigroup's Apery set.
  std::vector<i64> raw(ap.w.begin(), ap.w.end());
  raw[0] = n1;
  const Generators s = Generators::from_raw(raw);
  if (apery_set(s, n1) != ap)
    fail(Errc::invalid_argument,
         "table is not the Apery set of the semigroup it spans");

  if (!ap.monotone())
    fail(Errc::not_mans,
         "extension requires a monotone Apery table");

  const i64 t = n_new % n1;
  const i64 top = s.max_generator();
  if (t == 0 || n_new <= top || top % n1 >= t ||
      !(ap.w[t - 1] < n_new && n_new < ap.w[t])) {
    std::string joined;
    for (i64 v : s.elems()) joined += (joined.empty() ? "" : ",") + std::to_string(v);
    fail(Errc::not_suitably_monotone,
         std::to_string(n_new) + " is not suitably monotone for <" + joined + ">");
  }

  // Shift levels are capped at K = (n1-1)/t: beyond that, k*n_new wraps past
  // the residue of n_new itself and can never be part of a least element.
  const i64 cap = (n1 - 1) / t;
  AperyTable out;
  out.modulus = n1;
  out.w.resize(static_cast<std::size_t>(n1));
  for (i64 i = 0; i < n1; ++i) {
    i64 best = ap.w[i];
    const i64 kmax = std::min(cap, i / t);
    for (i64 k = 1; k <= kmax; ++k) {
      best = std::min(best,
                      checked_add(checked_mul(k, n_new), ap.w[i - k * t]));
    }
    out.w[i] = best;
  }
  return out;
}

Profile make_profile(const Generators& s) {
  Profile p{s, frobenius(s), genus(s), pseudo_frobenius(s), 0,
            is_mans(s).is_mans, Irreducibility::symmetric};
  p.type_count = static_cast<i64>(p.pf.size());
  p.irreducibility =
      s.is_naturals() ? Irreducibility::symmetric : classify_irreducible(s);
  return p;
}

}  // namespace mans
