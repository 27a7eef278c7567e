#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Stable error codes; mirrored one-to-one in the C API header.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  search_capped = 2,
  no_triple_system = 3,
  prime_required = 4,
  parameter_infeasible = 5,
  block_too_large = 6,
  degree_exceeded = 7,
  pattern_too_large = 8,
  empty_part = 9,
  cleanup_collapsed = 10,
  witness_incomplete = 11,
  container_bounds_exceeded = 12,
  io_failure = 13,
  internal = 14,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ramsey
