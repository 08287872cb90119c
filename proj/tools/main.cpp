#include "cli/cli.hpp"

int main(int argc, char** argv) { return exactrn::cli::run(argc, argv); }
