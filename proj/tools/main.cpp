// Command-line front end. Talks to the library exclusively through the
// public C interface in <mans/mans.h>.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.

#include <mans/mans.h>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool as_json = false;
  bool quiet = false;
};

// Owning wrappers around the C handles.
struct SemigroupHandle {
  mans_semigroup* ptr = nullptr;
  ~SemigroupHandle() { mans_semigroup_destroy(ptr); }
};

struct TreeHandle {
  mans_tree* ptr = nullptr;
  ~TreeHandle() { mans_tree_destroy(ptr); }
};

std::string status_detail(mans_status status) {
  std::string detail = mans_status_name(status);
  const char* message = mans_last_error();
  if (message != nullptr && message[0] != '\0')
    detail += std::string(": ") + message;
  return detail;
}

void print_envelope(const Options& opts, const std::string& command,
                    const json& inputs, const json& result) {
  if (opts.quiet) return;
  json envelope;
  envelope["command"] = command;
  envelope["inputs"] = inputs;
  envelope["result"] = result;
  envelope["status"] = "ok";
  std::cout << envelope.dump() << "\n";
}

int print_error(const Options& opts, const std::string& command,
                const json& inputs, const std::string& detail) {
  if (opts.as_json) {
    json envelope;
    envelope["command"] = command;
    envelope["error_detail"] = detail;
    envelope["inputs"] = inputs;
    envelope["status"] = "error";
    std::cout << envelope.dump() << "\n";
  } else {
    std::cerr << "error: " << detail << "\n";
  }
  return kExitUsage;
}

std::vector<std::int64_t> fetch_array(
    const std::function<mans_status(int64_t*, size_t, size_t*)>& getter) {
  size_t count = 0;
  mans_status status = getter(nullptr, 0, &count);
  if (status != MANS_OK) throw status;
  std::vector<std::int64_t> values(count);
  if (count > 0) {
    status = getter(values.data(), count, &count);
    if (status != MANS_OK) throw status;
  }
  return values;
}

std::string join(const std::vector<std::int64_t>& values, const char* sep = ",") {
  std::string out;
  for (std::int64_t v : values) out += (out.empty() ? "" : sep) + std::to_string(v);
  return out;
}

std::string brackets(const std::vector<std::int64_t>& values) {
  return "⟨" + join(values) + "⟩";
}

const char* irreducibility_text(int irr) {
  switch (irr) {
    case MANS_IRR_SYMMETRIC: return "symmetric";
    case MANS_IRR_PSEUDO_SYMMETRIC: return "pseudo_symmetric";
    default: return "neither";
  }
}

SemigroupHandle make_semigroup(const std::vector<std::int64_t>& gens) {
  SemigroupHandle handle;
  const mans_status status =
      mans_semigroup_create(gens.data(), gens.size(), &handle.ptr);
  if (status != MANS_OK) throw status;
  return handle;
}

json params_json(const mans_e3_params& p) {
  json out;
  out["m"] = p.m;
  out["a"] = p.a;
  out["b"] = p.b;
  out["t"] = p.t;
  out["q"] = p.q;
  out["r"] = p.r;
  return out;
}

int cmd_analyze(const Options& opts, const std::vector<std::int64_t>& gens,
                bool with_params) {
  json inputs;
  inputs["gens"] = gens;
  inputs["params"] = with_params;
  try {
    const SemigroupHandle s = make_semigroup(gens);
    const auto msg = fetch_array([&](int64_t* out, size_t cap, size_t* count) {
      return mans_semigroup_generators(s.ptr, out, cap, count);
    });
    mans_profile profile;
    if (mans_status status = mans_semigroup_profile(s.ptr, &profile);
        status != MANS_OK)
      throw status;
    const auto pf = fetch_array([&](int64_t* out, size_t cap, size_t* count) {
      return mans_semigroup_pseudo_frobenius(s.ptr, out, cap, count);
    });

    json result;
    result["gens"] = msg;
    result["e"] = profile.embedding_dim;
    result["m"] = profile.multiplicity;
    result["ratio"] = profile.embedding_dim >= 2 ? json(profile.ratio) : json(nullptr);
    result["max_generator"] = profile.max_generator;
    result["frobenius"] = profile.frobenius;
    result["genus"] = profile.genus;
    result["pf"] = pf;
    result["type"] = profile.type_count;
    result["is_mans"] = profile.is_mans != 0;
    result["irreducibility"] = irreducibility_text(profile.irreducibility);

    std::optional<mans_e3_params> params;
    if (with_params) {
      mans_e3_params p;
      if (mans_e3_params_of(s.ptr, &p) == MANS_OK) params = p;
      if (params) {
        json extra = params_json(*params);
        int flag = 0;
        mans_e3_is_symmetric(&*params, &flag);
        extra["symmetric"] = flag != 0;
        mans_e3_is_pseudo_symmetric(&*params, &flag);
        extra["pseudo_symmetric"] = flag != 0;
        result["params"] = extra;
      } else {
        result["params"] = nullptr;
      }
    }

    if (opts.as_json) {
      print_envelope(opts, "analyze", inputs, result);
    } else if (!opts.quiet) {
      std::cout << "msg: " << brackets(msg) << "\n"
                << "e: " << profile.embedding_dim << "  m: " << profile.multiplicity;
      if (profile.embedding_dim >= 2) std::cout << "  r: " << profile.ratio;
      std::cout << "  M: " << profile.max_generator << "\n"
                << "F: " << profile.frobenius << "\n"
                << "g: " << profile.genus << "\n"
                << "PF: {" << join(pf) << "}\n"
                << "type: " << profile.type_count << "\n"
                << "is_mans: " << (profile.is_mans ? "true" : "false") << "\n"
                << "irreducibility: " << irreducibility_text(profile.irreducibility)
                << "\n";
      if (with_params) {
        if (params) {
          int sym = 0, psym = 0;
          mans_e3_is_symmetric(&*params, &sym);
          mans_e3_is_pseudo_symmetric(&*params, &psym);
          std::cout << "params: m=" << params->m << " a=" << params->a
                    << " b=" << params->b << " t=" << params->t
                    << " q=" << params->q << " r=" << params->r << "\n"
                    << "symmetric: " << (sym ? "true" : "false") << "\n"
                    << "pseudo_symmetric: " << (psym ? "true" : "false") << "\n";
        } else {
          std::cout << "params: not an embedding-dimension-3 semigroup "
                       "with monotone Apery set\n";
        }
      }
    }
    return kExitOk;
  } catch (mans_status status) {
    return print_error(opts, "analyze", inputs, status_detail(status));
  }
}

int cmd_apery(const Options& opts, const std::vector<std::int64_t>& gens,
              std::int64_t modulus) {
  json inputs;
  inputs["gens"] = gens;
  inputs["mod"] = modulus;
  try {
    const SemigroupHandle s = make_semigroup(gens);
    const auto table = fetch_array([&](int64_t* out, size_t cap, size_t* count) {
      return mans_semigroup_apery(s.ptr, modulus, out, cap, count);
    });
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < table.size(); ++i)
      if (table[i] >= table[i + 1]) monotone = false;

    json result;
    result["modulus"] = modulus;
    result["w"] = table;
    result["monotone"] = monotone;
    if (opts.as_json) {
      print_envelope(opts, "apery", inputs, result);
    } else if (!opts.quiet) {
      std::cout << "Ap(S," << modulus << ") = (" << join(table) << ")\n"
                << "monotone: " << (monotone ? "true" : "false") << "\n";
    }
    return kExitOk;
  } catch (mans_status status) {
    return print_error(opts, "apery", inputs, status_detail(status));
  }
}

int cmd_mans_check(const Options& opts, const std::vector<std::int64_t>& gens) {
  json inputs;
  inputs["gens"] = gens;
  try {
    const SemigroupHandle s = make_semigroup(gens);
    mans_check_report report;
    if (mans_status status = mans_semigroup_check_monotone(s.ptr, &report);
        status != MANS_OK)
      throw status;
    int recursive = 0;
    if (mans_status status =
            mans_semigroup_check_monotone_recursive(s.ptr, &recursive);
        status != MANS_OK)
      throw status;

    json result;
    result["is_mans"] = report.is_mans != 0;
    result["failing_index"] =
        report.has_failing_index ? json(report.failing_index) : json(nullptr);
    result["ratio_coefficient"] = report.has_ratio_coefficient
                                      ? json(report.ratio_coefficient)
                                      : json(nullptr);
    result["is_mans_recursive"] = recursive != 0;
    if (opts.as_json) {
      print_envelope(opts, "mans-check", inputs, result);
    } else if (!opts.quiet) {
      std::cout << "is_mans: " << (report.is_mans ? "true" : "false") << "\n";
      if (report.has_failing_index)
        std::cout << "failing_index: " << report.failing_index << "\n";
      if (report.has_ratio_coefficient)
        std::cout << "ratio_coefficient: " << report.ratio_coefficient << "\n";
      std::cout << "is_mans_recursive: " << (recursive ? "true" : "false") << "\n";
    }
    return kExitOk;
  } catch (mans_status status) {
    return print_error(opts, "mans-check", inputs, status_detail(status));
  }
}

int cmd_params(const Options& opts, const std::vector<std::int64_t>& gens) {
  json inputs;
  inputs["gens"] = gens;
  try {
    const SemigroupHandle s = make_semigroup(gens);
    mans_e3_params params;
    if (mans_status status = mans_e3_params_of(s.ptr, &params);
        status != MANS_OK)
      throw status;

    int64_t frob = 0, gen_count = 0;
    if (mans_status status = mans_e3_frobenius(&params, &frob); status != MANS_OK)
      throw status;
    if (mans_status status = mans_e3_genus(&params, &gen_count);
        status != MANS_OK)
      throw status;
    std::vector<std::int64_t> pf(2);
    size_t pf_count = 0;
    if (mans_status status =
            mans_e3_pseudo_frobenius(&params, pf.data(), pf.size(), &pf_count);
        status != MANS_OK)
      throw status;
    pf.resize(pf_count);
    int sym = 0, psym = 0;
    mans_e3_is_symmetric(&params, &sym);
    mans_e3_is_pseudo_symmetric(&params, &psym);

    json result = params_json(params);
    result["frobenius"] = frob;
    result["genus"] = gen_count;
    result["pf"] = pf;
    result["symmetric"] = sym != 0;
    result["pseudo_symmetric"] = psym != 0;
    if (opts.as_json) {
      print_envelope(opts, "params", inputs, result);
    } else if (!opts.quiet) {
      std::cout << "m=" << params.m << " a=" << params.a << " b=" << params.b
                << " t=" << params.t << " q=" << params.q << " r=" << params.r
                << "\n"
                << "F: " << frob << "\n"
                << "g: " << gen_count << "\n"
                << "PF: {" << join(pf) << "}\n"
                << "symmetric: " << (sym ? "true" : "false") << "\n"
                << "pseudo_symmetric: " << (psym ? "true" : "false") << "\n";
    }
    return kExitOk;
  } catch (mans_status status) {
    return print_error(opts, "params", inputs, status_detail(status));
  }
}

int cmd_tree(const Options& opts, std::int64_t m, std::int64_t r,
             const std::string& format, std::optional<std::int64_t> max_depth) {
  json inputs;
  inputs["m"] = m;
  inputs["r"] = r;
  inputs["format"] = format;
  inputs["max_depth"] = max_depth ? json(*max_depth) : json(nullptr);
  try {
    TreeHandle tree;
    if (mans_status status =
            mans_tree_build(m, r, max_depth.value_or(-1), &tree.ptr);
        status != MANS_OK)
      throw status;

    if (format == "dot") {
      char* text = nullptr;
      if (mans_status status = mans_tree_export_dot(tree.ptr, &text);
          status != MANS_OK)
        throw status;
      if (!opts.quiet) std::cout << text;
      mans_string_free(text);
      return kExitOk;
    }

    char* text = nullptr;
    if (mans_status status = mans_tree_export_json(tree.ptr, &text);
        status != MANS_OK)
      throw status;
    const json result = json::parse(text);
    mans_string_free(text);
    print_envelope(opts, "tree", inputs, result);
    return kExitOk;
  } catch (mans_status status) {
    return print_error(opts, "tree", inputs, status_detail(status));
  }
}

int cmd_verify(const Options& opts, const std::string& suite, std::int64_t max_m,
               std::int64_t max_a, std::int64_t max_gaps) {
  json inputs;
  inputs["suite"] = suite;
  inputs["max_m"] = max_m;
  inputs["max_a"] = max_a;
  inputs["max_gaps"] = max_gaps;
  mans_verify_result result;
  const mans_status status =
      mans_verify_run(suite.c_str(), max_m, max_a, max_gaps, &result);
  if (status != MANS_OK)
    return print_error(opts, "verify", inputs, status_detail(status));

  json payload;
  payload["cases"] = result.cases;
  payload["mismatches"] = result.mismatches;
  payload["skipped"] = result.skipped;
  payload["first_counterexample"] = result.mismatches > 0
                                        ? json(result.first_counterexample)
                                        : json(nullptr);
  if (opts.as_json) {
    print_envelope(opts, "verify", inputs, payload);
  } else if (!opts.quiet) {
    std::cout << "suite: " << suite << "\n"
              << "cases: " << result.cases << "\n"
              << "mismatches: " << result.mismatches << "\n";
    if (result.skipped > 0) std::cout << "skipped: " << result.skipped << "\n";
    if (result.mismatches > 0)
      std::cout << "first_counterexample: " << result.first_counterexample << "\n";
  }
  return result.mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Numerical semigroups with monotone Apery sets: invariants, "
               "family trees, and oracle verification"};
  app.require_subcommand(1);
  app.add_flag("--json", opts.as_json, "Emit a machine-readable JSON envelope");
  app.add_flag("--quiet", opts.quiet, "Suppress output; rely on the exit code");

  std::vector<std::int64_t> gens;
  bool with_params = false;
  auto* analyze = app.add_subcommand("analyze", "Invariants of one semigroup");
  analyze->add_option("gens", gens, "Generators")->required();
  analyze->add_flag("--params", with_params,
                    "Also report (m,a,b,t,q,r) when the semigroup is a "
                    "three-generator one with monotone Apery set");

  std::int64_t modulus = 0;
  auto* apery = app.add_subcommand("apery", "Apery set with respect to --mod");
  apery->add_option("gens", gens, "Generators")->required();
  apery->add_option("--mod", modulus, "Modulus (a nonzero member)")->required();

  auto* check = app.add_subcommand("mans-check",
                                   "Monotone-Apery check, direct and recursive");
  check->add_option("gens", gens, "Generators")->required();

  auto* params = app.add_subcommand(
      "params", "Extract (m,a,b,t,q,r) plus closed-form invariants");
  params->add_option("gens", gens, "Generators")->required();

  std::int64_t tree_m = 0;
  std::int64_t tree_r = 0;
  std::string format = "json";
  std::optional<std::int64_t> max_depth;
  auto* tree = app.add_subcommand(
      "tree", "The tree of all monotone-Apery semigroups with fixed "
              "multiplicity and ratio");
  tree->add_option("m", tree_m, "Multiplicity")->required();
  tree->add_option("r", tree_r, "Ratio")->required();
  tree->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  tree->add_option("--max-depth", max_depth, "Cap the expansion depth");

  std::string suite;
  std::int64_t max_m = 8;
  std::int64_t max_a = 2;
  std::int64_t max_gaps = 24;
  auto* verify = app.add_subcommand("verify", "Formula-vs-oracle sweeps");
  verify->add_option("--suite", suite, "One of: e3-formulas, pf, tree, apery-extend")
      ->required()
      ->check(CLI::IsMember({"e3-formulas", "pf", "tree", "apery-extend"}));
  verify->add_option("--max-m", max_m, "Largest multiplicity to sweep");
  verify->add_option("--max-a", max_a, "Largest ratio coefficient to sweep");
  verify->add_option("--max-gaps", max_gaps,
                     "Oracle search limit on the root gap count");

  for (auto* sub : {analyze, apery, check, params, tree, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (analyze->parsed()) return cmd_analyze(opts, gens, with_params);
  if (apery->parsed()) return cmd_apery(opts, gens, modulus);
  if (check->parsed()) return cmd_mans_check(opts, gens);
  if (params->parsed()) return cmd_params(opts, gens);
  if (tree->parsed()) return cmd_tree(opts, tree_m, tree_r, format, max_depth);
  if (verify->parsed()) return cmd_verify(opts, suite, max_m, max_a, max_gaps);
  return kExitUsage;
}
