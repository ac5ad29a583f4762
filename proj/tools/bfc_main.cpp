#include <iostream>

#include "bfc/cli/cli.hpp"

int main(int argc, char** argv) { return bfc::run_cli(argc, argv, std::cout, std::cerr); }
