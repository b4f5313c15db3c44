#pragma once

namespace fockforge::cli {

// Exit codes: 0 pass or measured, 1 a check failed, 2 usage error.
int run_cli(int argc, char** argv);

}  // namespace fockforge::cli
