#ifndef MANS_CORE_ERRORS_HPP
#define MANS_CORE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mans {

// Failure categories surfaced by the library. Arithmetic never wraps:
// anything that would leave the signed 64-bit range reports Errc::overflow.
enum class Errc {
  invalid_argument,
  empty_input,
  gcd_not_one,
  overflow,
  modulus_not_in_semigroup,
  undefined_for_naturals,
  not_embedding_dim_3,
  not_mans,
  invalid_params,
  not_suitably_monotone,
  is_root,
  search_space_too_large,
  formula_mismatch,
  internal,
};

const char* errc_name(Errc code);

class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw SemigroupError(code, message);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    fail(Errc::overflow, "integer overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    fail(Errc::overflow, "integer overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(Errc::overflow, "integer overflow in multiplication");
  return out;
}

// Floor division toward negative infinity; b must be positive.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

}  // namespace mans

#endif
