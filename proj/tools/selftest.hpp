// selftest.hpp — in-binary invariant suite behind `router selftest`.

#pragma once

namespace router::selftest {

/// Runs every module's invariant suite; prints one line per check to stderr.
/// Returns the number of failed checks.
int run();

}  // namespace router::selftest
