#pragma once

#include <iosfwd>

namespace pgeom::selftest {

/// Runs the fast deterministic invariant suite (a few thousand instances per
/// property, fixed seeds, < 1 s). Prints one line per check to `log`
/// ("ok - <name>" or "FAIL - <name>: <detail>") and returns the number of
/// failed checks (0 on success).
int run(std::ostream& log);

} // namespace pgeom::selftest
