#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

enum class Errc {
  invalid_argument,
  empty_geometry,
  anchor_inside_hull,
  too_large,
  t3_violated,
  budget_exhausted,
  degenerate_regions,
  parse_error,
  io_error,
  verify_failed,
  not_found,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace pierce
