#pragma once

namespace far::cli {

// Parses flags, loads the config document when one is required, executes the
// requested mode and returns the process exit code: 0 success, 1 validation
// error, 2 reproduction-diff failure, 3 I/O error.
int run(int argc, char** argv);

}  // namespace far::cli
