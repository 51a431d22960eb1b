#pragma once

#include <stdexcept>
#include <string>

namespace pentagon {

/// Diagnostic categories. The CLI maps every category to exit code 2 and
/// prefixes messages with the category name, so scripts can tell a malformed
/// file from an oversized scan request.
enum class errc {
  io,            // file not readable / not writable
  parse,         // schema violation in a table file
  precondition,  // caller violated an operation's stated precondition
  budget,        // requested scan exceeds the configured candidate budget
  internal       // a certified invariant failed; indicates a bug, not bad input
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace pentagon
