#pragma once

#include <stdexcept>
#include <string>

namespace mullineux {

enum class errc {
  invalid_parameter,
  invalid_input,
  no_path,
  malformed_symbol,
  not_admissible,
  internal_consistency,
  unsupported_input,
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_input: return "invalid-input";
    case errc::no_path: return "no-path";
    case errc::malformed_symbol: return "malformed-symbol";
    case errc::not_admissible: return "not-admissible";
    case errc::internal_consistency: return "internal-consistency";
    case errc::unsupported_input: return "unsupported-input";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require_e(int e) {
  if (e < 2) fail(errc::invalid_parameter, "e must be at least 2, got " + std::to_string(e));
}

}  // namespace mullineux
