#pragma once

namespace ehv::cli {

// Dispatches the full command line; returns the process exit code
// (0 all checks pass, 1 check failures, 2 parse/usage errors).
int run(int argc, char** argv);

}  // namespace ehv::cli
