// Implementation of the public C interface. Exceptions from the core stop at
// this boundary and come out as status codes plus a thread-local message.

#include <mans/mans.h>

#include <cstdio>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/monotone.hpp"
#include "core/oracle.hpp"
#include "core/semigroup.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"

struct mans_semigroup {
  mans::Generators gens;
};

struct mans_tree {
  mans::MansTree tree;
};

namespace {

thread_local std::string g_last_error;

mans_status map_code(mans::Errc code) {
  switch (code) {
    case mans::Errc::invalid_argument: return MANS_ERR_INVALID_ARGUMENT;
    case mans::Errc::empty_input: return MANS_ERR_EMPTY_INPUT;
    case mans::Errc::gcd_not_one: return MANS_ERR_GCD_NOT_ONE;
    case mans::Errc::overflow: return MANS_ERR_OVERFLOW;
    case mans::Errc::modulus_not_in_semigroup: return MANS_ERR_MODULUS_NOT_IN_SEMIGROUP;
    case mans::Errc::undefined_for_naturals: return MANS_ERR_UNDEFINED_FOR_NATURALS;
    case mans::Errc::not_embedding_dim_3: return MANS_ERR_NOT_EMBEDDING_DIM_3;
    case mans::Errc::not_mans: return MANS_ERR_NOT_MANS;
    case mans::Errc::invalid_params: return MANS_ERR_INVALID_PARAMS;
    case mans::Errc::not_suitably_monotone: return MANS_ERR_NOT_SUITABLY_MONOTONE;
    case mans::Errc::is_root: return MANS_ERR_IS_ROOT;
    case mans::Errc::search_space_too_large: return MANS_ERR_SEARCH_SPACE_TOO_LARGE;
    case mans::Errc::formula_mismatch: return MANS_ERR_FORMULA_MISMATCH;
    case mans::Errc::internal: return MANS_ERR_INTERNAL;
  }
  return MANS_ERR_INTERNAL;
}

mans_status failure(mans_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
mans_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const mans::SemigroupError& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MANS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MANS_ERR_INTERNAL;
  }
}

// Two-call array export: report the length, then fill if there is room.
mans_status copy_out(const std::vector<std::int64_t>& values, int64_t* out,
                     size_t capacity, size_t* count) {
  if (count != nullptr) *count = values.size();
  if (out == nullptr)
    return count != nullptr
               ? MANS_OK
               : failure(MANS_ERR_INVALID_ARGUMENT, "out and count are both null");
  if (capacity < values.size())
    return failure(MANS_ERR_BUFFER_TOO_SMALL, "output buffer is too small");
  std::memcpy(out, values.data(), values.size() * sizeof(int64_t));
  return MANS_OK;
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

mans::Mans3Params to_core(const mans_e3_params& p) {
  return mans::Mans3Params::create(p.m, p.a, p.b, p.t);
}

}  // namespace

extern "C" {

const char* mans_status_name(mans_status status) {
  switch (status) {
    case MANS_OK: return "ok";
    case MANS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MANS_ERR_EMPTY_INPUT: return "empty_input";
    case MANS_ERR_GCD_NOT_ONE: return "gcd_not_one";
    case MANS_ERR_OVERFLOW: return "overflow";
    case MANS_ERR_MODULUS_NOT_IN_SEMIGROUP: return "modulus_not_in_semigroup";
    case MANS_ERR_UNDEFINED_FOR_NATURALS: return "undefined_for_naturals";
    case MANS_ERR_NOT_EMBEDDING_DIM_3: return "not_embedding_dim_3";
    case MANS_ERR_NOT_MANS: return "not_mans";
    case MANS_ERR_INVALID_PARAMS: return "invalid_params";
    case MANS_ERR_NOT_SUITABLY_MONOTONE: return "not_suitably_monotone";
    case MANS_ERR_IS_ROOT: return "is_root";
    case MANS_ERR_SEARCH_SPACE_TOO_LARGE: return "search_space_too_large";
    case MANS_ERR_FORMULA_MISMATCH: return "formula_mismatch";
    case MANS_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case MANS_ERR_UNKNOWN_SUITE: return "unknown_suite";
    case MANS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mans_last_error(void) { return g_last_error.c_str(); }

mans_status mans_semigroup_create(const int64_t* values, size_t count,
                                  mans_semigroup** out) {
  if (out == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "out is null");
  *out = nullptr;
  if (values == nullptr && count > 0)
    return failure(MANS_ERR_INVALID_ARGUMENT, "values is null");
  return guarded([&] {
    auto gens = mans::Generators::from_raw(
        std::vector<std::int64_t>(values, values + count));
    *out = new mans_semigroup{std::move(gens)};
    return MANS_OK;
  });
}

void mans_semigroup_destroy(mans_semigroup* s) { delete s; }

size_t mans_semigroup_generator_count(const mans_semigroup* s) {
  return s == nullptr ? 0 : s->gens.embedding_dim();
}

mans_status mans_semigroup_generators(const mans_semigroup* s, int64_t* out,
                                      size_t capacity, size_t* count) {
  if (s == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "semigroup is null");
  return copy_out(s->gens.elems(), out, capacity, count);
}

mans_status mans_semigroup_profile(const mans_semigroup* s, mans_profile* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const mans::Profile p = mans::make_profile(s->gens);
    out->multiplicity = p.generators.multiplicity();
    out->ratio = p.generators.embedding_dim() >= 2 ? p.generators.ratio() : 0;
    out->max_generator = p.generators.max_generator();
    out->embedding_dim = static_cast<int64_t>(p.generators.embedding_dim());
    out->frobenius = p.frobenius;
    out->genus = p.genus;
    out->type_count = p.type_count;
    out->is_mans = p.is_mans ? 1 : 0;
    out->irreducibility = static_cast<int>(p.irreducibility);
    return MANS_OK;
  });
}

mans_status mans_semigroup_contains(const mans_semigroup* s, int64_t x, int* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::contains(s->gens, x) ? 1 : 0;
    return MANS_OK;
  });
}

mans_status mans_semigroup_frobenius(const mans_semigroup* s, int64_t* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::frobenius(s->gens);
    return MANS_OK;
  });
}

mans_status mans_semigroup_genus(const mans_semigroup* s, int64_t* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::genus(s->gens);
    return MANS_OK;
  });
}

mans_status mans_semigroup_pseudo_frobenius(const mans_semigroup* s, int64_t* out,
                                            size_t capacity, size_t* count) {
  if (s == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "semigroup is null");
  return guarded([&] {
    return copy_out(mans::pseudo_frobenius(s->gens), out, capacity, count);
  });
}

mans_status mans_semigroup_type(const mans_semigroup* s, int64_t* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::type_of(s->gens);
    return MANS_OK;
  });
}

mans_status mans_semigroup_irreducibility(const mans_semigroup* s, int* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = static_cast<int>(mans::classify_irreducible(s->gens));
    return MANS_OK;
  });
}

mans_status mans_semigroup_apery(const mans_semigroup* s, int64_t modulus,
                                 int64_t* out, size_t capacity, size_t* count) {
  if (s == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "semigroup is null");
  return guarded([&] {
    return copy_out(mans::apery_set(s->gens, modulus).w, out, capacity, count);
  });
}

mans_status mans_semigroup_check_monotone(const mans_semigroup* s,
                                          mans_check_report* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const mans::MansCheckReport report = mans::is_mans(s->gens);
    out->is_mans = report.is_mans ? 1 : 0;
    out->has_failing_index = report.failing_index.has_value() ? 1 : 0;
    out->failing_index = report.failing_index.value_or(0);
    out->has_ratio_coefficient = report.ratio_coefficient.has_value() ? 1 : 0;
    out->ratio_coefficient = report.ratio_coefficient.value_or(0);
    return MANS_OK;
  });
}

mans_status mans_semigroup_check_monotone_recursive(const mans_semigroup* s,
                                                    int* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::is_mans_recursive(s->gens) ? 1 : 0;
    return MANS_OK;
  });
}

mans_status mans_semigroup_residues_monotone(const mans_semigroup* s, int* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::residues_monotone(s->gens) ? 1 : 0;
    return MANS_OK;
  });
}

mans_status mans_e3_params_of(const mans_semigroup* s, mans_e3_params* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const mans::Mans3Params p = mans::mans3_params(s->gens);
    *out = {p.m, p.a, p.b, p.t, p.q, p.r};
    return MANS_OK;
  });
}

mans_status mans_e3_params_make(int64_t m, int64_t a, int64_t b, int64_t t,
                                mans_e3_params* out) {
  if (out == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    const mans::Mans3Params p = mans::Mans3Params::create(m, a, b, t);
    *out = {p.m, p.a, p.b, p.t, p.q, p.r};
    return MANS_OK;
  });
}

mans_status mans_e3_expand(const mans_e3_params* p, mans_semigroup** out) {
  if (p == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new mans_semigroup{mans::mans3_from_params(to_core(*p))};
    return MANS_OK;
  });
}

mans_status mans_e3_apery(const mans_e3_params* p, int64_t* out,
                          size_t capacity, size_t* count) {
  if (p == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "params is null");
  return guarded([&] {
    return copy_out(mans::mans3_apery(to_core(*p)).w, out, capacity, count);
  });
}

mans_status mans_e3_frobenius(const mans_e3_params* p, int64_t* out) {
  if (p == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::mans3_frobenius(to_core(*p));
    return MANS_OK;
  });
}

mans_status mans_e3_genus(const mans_e3_params* p, int64_t* out) {
  if (p == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::mans3_genus(to_core(*p));
    return MANS_OK;
  });
}

mans_status mans_e3_pseudo_frobenius(const mans_e3_params* p, int64_t* out,
                                     size_t capacity, size_t* count) {
  if (p == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "params is null");
  return guarded([&] {
    return copy_out(mans::mans3_pseudo_frobenius(to_core(*p)), out, capacity, count);
  });
}

mans_status mans_e3_is_symmetric(const mans_e3_params* p, int* out) {
  if (p == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::mans3_is_symmetric(to_core(*p)) ? 1 : 0;
    return MANS_OK;
  });
}

mans_status mans_e3_is_pseudo_symmetric(const mans_e3_params* p, int* out) {
  if (p == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::mans3_is_pseudo_symmetric(to_core(*p)) ? 1 : 0;
    return MANS_OK;
  });
}

mans_status mans_apery_extend(const int64_t* w, size_t count, int64_t n_new,
                              int64_t* out) {
  if (w == nullptr || out == nullptr || count == 0)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null table");
  return guarded([&] {
    mans::AperyTable table;
    table.modulus = static_cast<std::int64_t>(count);
    table.w.assign(w, w + count);
    const mans::AperyTable extended = mans::extend_apery(table, n_new);
    std::memcpy(out, extended.w.data(), count * sizeof(int64_t));
    return MANS_OK;
  });
}

mans_status mans_semigroup_suitably_monotone(const mans_semigroup* s,
                                             int64_t* out, size_t capacity,
                                             size_t* count) {
  if (s == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "semigroup is null");
  return guarded([&] {
    return copy_out(mans::suitably_monotone_elements(s->gens), out, capacity, count);
  });
}

mans_status mans_semigroup_child_count(const mans_semigroup* s, int64_t* out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mans::child_count(s->gens);
    return MANS_OK;
  });
}

mans_status mans_semigroup_parent(const mans_semigroup* s, mans_semigroup** out) {
  if (s == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new mans_semigroup{mans::parent_of(s->gens)};
    return MANS_OK;
  });
}

mans_status mans_tree_build(int64_t m, int64_t r, int64_t max_depth,
                            mans_tree** out) {
  if (out == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded([&] {
    std::optional<std::int64_t> cap;
    if (max_depth >= 0) cap = max_depth;
    *out = new mans_tree{mans::build_tree(m, r, cap)};
    return MANS_OK;
  });
}

void mans_tree_destroy(mans_tree* t) { delete t; }

size_t mans_tree_size(const mans_tree* t) {
  return t == nullptr ? 0 : t->tree.nodes.size();
}

int64_t mans_tree_multiplicity(const mans_tree* t) {
  return t == nullptr ? 0 : t->tree.m;
}

int64_t mans_tree_ratio(const mans_tree* t) {
  return t == nullptr ? 0 : t->tree.r;
}

mans_status mans_tree_node_generators(const mans_tree* t, size_t node,
                                      int64_t* out, size_t capacity,
                                      size_t* count) {
  if (t == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "tree is null");
  if (node >= t->tree.nodes.size())
    return failure(MANS_ERR_INVALID_ARGUMENT, "node index out of range");
  return copy_out(t->tree.nodes[node].semigroup.elems(), out, capacity, count);
}

mans_status mans_tree_node_parent(const mans_tree* t, size_t node, int64_t* out) {
  if (t == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  if (node >= t->tree.nodes.size())
    return failure(MANS_ERR_INVALID_ARGUMENT, "node index out of range");
  const auto& parent = t->tree.nodes[node].parent;
  *out = parent ? static_cast<int64_t>(*parent) : -1;
  return MANS_OK;
}

mans_status mans_tree_node_children(const mans_tree* t, size_t node,
                                    int64_t* out, size_t capacity,
                                    size_t* count) {
  if (t == nullptr) return failure(MANS_ERR_INVALID_ARGUMENT, "tree is null");
  if (node >= t->tree.nodes.size())
    return failure(MANS_ERR_INVALID_ARGUMENT, "node index out of range");
  std::vector<std::int64_t> children(t->tree.nodes[node].children.begin(),
                                     t->tree.nodes[node].children.end());
  return copy_out(children, out, capacity, count);
}

mans_status mans_tree_node_depth(const mans_tree* t, size_t node, int64_t* out) {
  if (t == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  if (node >= t->tree.nodes.size())
    return failure(MANS_ERR_INVALID_ARGUMENT, "node index out of range");
  *out = t->tree.nodes[node].depth;
  return MANS_OK;
}

mans_status mans_tree_export_dot(const mans_tree* t, char** out) {
  if (t == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(mans::export_dot(t->tree));
    return MANS_OK;
  });
}

mans_status mans_tree_export_json(const mans_tree* t, char** out) {
  if (t == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(mans::export_json(t->tree));
    return MANS_OK;
  });
}

void mans_string_free(char* s) { delete[] s; }

mans_status mans_verify_run(const char* suite, int64_t max_m, int64_t max_a,
                            int64_t max_gaps, mans_verify_result* out) {
  if (suite == nullptr || out == nullptr)
    return failure(MANS_ERR_INVALID_ARGUMENT, "null argument");
  if (max_gaps <= 0) max_gaps = 24;
  return guarded([&]() -> mans_status {
    mans::verify::SweepResult res;
    const std::string name(suite);
    if (name == "e3-formulas") {
      res = mans::verify::e3_formulas(max_m, max_a);
    } else if (name == "pf") {
      res = mans::verify::pf_vs_oracle(max_m, max_a);
    } else if (name == "tree") {
      res = mans::verify::tree_vs_oracle(max_m, max_a, max_gaps);
    } else if (name == "apery-extend") {
      res = mans::verify::apery_extend(max_m, max_a, max_gaps);
    } else {
      return failure(MANS_ERR_UNKNOWN_SUITE,
                     ("no verification suite named '" + name + "'").c_str());
    }
    out->cases = res.cases;
    out->mismatches = res.mismatches;
    out->skipped = res.skipped;
    std::snprintf(out->first_counterexample, sizeof(out->first_counterexample),
                  "%s", res.first_counterexample.c_str());
    return MANS_OK;
  });
}

}  // extern "C"
