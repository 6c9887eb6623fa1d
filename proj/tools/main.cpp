#include <iostream>

#include "irid/cli.hpp"

int main(int argc, char** argv) { return irid::cli::cli_main(argc, argv, std::cout, std::cerr); }
