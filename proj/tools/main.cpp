#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ragrowth::run_cli(argc, argv, std::cout, std::cerr); }
