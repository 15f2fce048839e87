#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nart {

enum class ErrorCode {
  ring_mismatch,
  non_unit,
  composition_ill_defined,
  invalid_code,
  not_simple_root,
  precision_too_low,
  target_not_solution,
  not_regular,
  not_transverse,
  non_polynomial_images,
  not_local,
  ill_defined_morphism,
  invalid_argument,
  not_prime,
  internal_invariant,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// command-line driver can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::internal_invariant, what);
}

}  // namespace nart
