#pragma once

#include <iosfwd>

namespace cdfree::tools {

/// Validates a build without the test harness: exhaustive engine agreement
/// on all labeled graphs with up to six vertices, plus the clique-machinery
/// properties against the brute-force oracle on seeded random instances.
/// Returns 0 when everything holds, 1 otherwise.
int run_selftest(std::ostream& out);

}  // namespace cdfree::tools
