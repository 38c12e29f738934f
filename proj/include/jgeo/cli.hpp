#pragma once

// The command-line driver, factored so tests can invoke it in-process.
// Subcommands: metric, curvature, geodesic, gns, verify. Exit codes: 0 on
// success (for verify: all checks passed), 1 when a verify suite fails a
// check, 2 on validation problems (bad documents, bad values, zero
// directions), 3 on solver-level failures (non-faithful state where
// faithfulness is required, incompatible tangents, degenerate planes).

#include <iosfwd>

namespace jgeo {

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace jgeo
