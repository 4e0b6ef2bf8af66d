#include "core/errors.hpp"

namespace mans {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::empty_input: return "empty_input";
    case Errc::gcd_not_one: return "gcd_not_one";
    case Errc::overflow: return "overflow";
    case Errc::modulus_not_in_semigroup: return "modulus_not_in_semigroup";
    case Errc::undefined_for_naturals: return "undefined_for_naturals";
    case Errc::not_embedding_dim_3: return "not_embedding_dim_3";
    case Errc::not_mans: return "not_mans";
    case Errc::invalid_params: return "invalid_params";
    case Errc::not_suitably_monotone: return "not_suitably_monotone";
    case Errc::is_root: return "is_root";
    case Errc::search_space_too_large: return "search_space_too_large";
    case Errc::formula_mismatch: return "formula_mismatch";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace mans
