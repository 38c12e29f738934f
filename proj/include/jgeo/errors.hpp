#pragma once

#include <stdexcept>
#include <string>

namespace jgeo {

// Error taxonomy shared by the library and the CLI. The CLI maps
// validation-type failures to exit code 2 and solver-type failures to 3.
enum class errc {
  validation_error,     // malformed value: bad shape, non-self-adjoint, bad state, ...
  schema_error,         // malformed document: unknown field, wrong structure
  incompatible_tangent, // tangent has mass on the kernel x kernel sub-block
  support_mismatch,     // tangent supported outside the base distribution
  not_faithful,         // operation requires a full-rank state
  degenerate_plane,     // curvature plane with (numerically) dependent generators
  zero_direction,       // zero initial direction where a nonzero one is required
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::validation_error: return "VALIDATION_ERROR";
    case errc::schema_error: return "SCHEMA_ERROR";
    case errc::incompatible_tangent: return "INCOMPATIBLE_TANGENT";
    case errc::support_mismatch: return "SUPPORT_MISMATCH";
    case errc::not_faithful: return "NOT_FAITHFUL";
    case errc::degenerate_plane: return "DEGENERATE_PLANE";
    case errc::zero_direction: return "ZERO_DIRECTION";
  }
  return "UNKNOWN";
}

// Validation errors come from bad input values or documents; solver errors
// come from well-formed inputs that violate a geometric precondition.
inline bool is_validation(errc c) {
  return c == errc::validation_error || c == errc::schema_error ||
         c == errc::zero_direction;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace jgeo
