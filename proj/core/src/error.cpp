#include "isoforest/error.hpp"

namespace isoforest {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::multiple_roots: return "multiple_roots";
    case errc::cycle_detected: return "cycle_detected";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::unbalanced_parens: return "unbalanced_parens";
    case errc::trailing_garbage: return "trailing_garbage";
    case errc::empty_input: return "empty_input";
    case errc::parse_error: return "parse_error";
    case errc::domain_error: return "domain_error";
    case errc::not_a_prime_in_state: return "not_a_prime_in_state";
    case errc::unknown_color: return "unknown_color";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

void raise(errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace isoforest
