#pragma once

#include <stdexcept>
#include <string>

namespace fcut {

enum class Errc {
  endpoint_out_of_range,
  loop_edge,
  duplicate_edge,
  bad_parameter,
  disconnected_input,
  order_above_cap,
  regularity_mismatch,
  unknown_family,
  unknown_fixture,
  malformed_header,
  trailing_bits,
  byte_out_of_range,
  count_mismatch,
  io_failure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::endpoint_out_of_range: return "endpoint out of range";
    case Errc::loop_edge: return "loop edge";
    case Errc::duplicate_edge: return "duplicate edge";
    case Errc::bad_parameter: return "bad parameter";
    case Errc::disconnected_input: return "disconnected input";
    case Errc::order_above_cap: return "order above cap";
    case Errc::regularity_mismatch: return "regularity mismatch";
    case Errc::unknown_family: return "unknown family";
    case Errc::unknown_fixture: return "unknown fixture";
    case Errc::malformed_header: return "malformed header";
    case Errc::trailing_bits: return "nonzero trailing bits";
    case Errc::byte_out_of_range: return "byte out of range";
    case Errc::count_mismatch: return "count mismatch";
    case Errc::io_failure: return "i/o failure";
  }
  return "unknown error";
}

// Single exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace fcut
