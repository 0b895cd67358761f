#include <iostream>

#include "otto/cli.hpp"

int main(int argc, char** argv) { return otto::cli::run_cli(argc, argv, std::cout, std::cerr); }
