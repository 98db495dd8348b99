#include "termheat/error.hpp"

namespace termheat {

const char* message_for(Errc code) noexcept {
  switch (code) {
    case Errc::empty_term: return "empty term";
    case Errc::empty_query: return "empty query";
    case Errc::unknown_term: return "unknown term";
    case Errc::value_out_of_range: return "normalized value out of range";
    case Errc::unsupported_snapshot_version: return "unsupported snapshot version";
    case Errc::corrupt_snapshot: return "corrupt snapshot";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::io_error: return "i/o error";
  }
  return "unknown error";
}

}  // namespace termheat
