#include <iostream>

#include "seacalc/cli.hpp"

int main(int argc, char** argv) { return seacalc::run_cli(argc, argv, std::cout, std::cerr); }
