#include <iostream>

#include "heckeforge_cli/cli.hpp"

int main(int argc, char** argv) { return heckeforge::cli::run(argc, argv, std::cout, std::cerr); }
