#pragma once

#include <stdexcept>
#include <string>

namespace termheat {

enum class Errc {
  empty_term,
  empty_query,
  unknown_term,
  value_out_of_range,
  unsupported_snapshot_version,
  corrupt_snapshot,
  invalid_argument,
  io_error,
};

// Canonical message for an error code. These strings are part of the wire
// contract (HTTP error bodies echo them verbatim).
const char* message_for(Errc code) noexcept;

// Every recoverable failure in the library is reported as an Error. what()
// is always the canonical message; detail() carries the offending value.
class Error : public std::runtime_error {
 public:
  explicit Error(Errc code, std::string detail = {})
      : std::runtime_error(message_for(code)), code_(code), detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace termheat
