#pragma once

#include <stdexcept>
#include <string>

namespace triple_lattice {

enum class errc {
  invalid_argument,
  overflow,
  not_a_triple,
  not_in_class_c,
  invalid_decomposition,
  bound_too_large,
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid argument";
    case errc::overflow: return "integer overflow";
    case errc::not_a_triple: return "not a Pythagorean triple";
    case errc::not_in_class_c: return "not in class C";
    case errc::invalid_decomposition: return "invalid decomposition";
    case errc::bound_too_large: return "bound too large";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace triple_lattice
