#pragma once

#include <stdexcept>
#include <string>

namespace isoforest {

enum class errc {
  multiple_roots,
  cycle_detected,
  index_out_of_range,
  unbalanced_parens,
  trailing_garbage,
  empty_input,
  parse_error,
  domain_error,
  not_a_prime_in_state,
  unknown_color,
  io_error,
};

const char* errc_name(errc code) noexcept;

/// All library failures are reported through this exception; code() tells
/// callers which contract was violated without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

}  // namespace isoforest
