#include "fockforge/cli/app.hpp"

int main(int argc, char** argv) { return fockforge::cli::run_cli(argc, argv); }
