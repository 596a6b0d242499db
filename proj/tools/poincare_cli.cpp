#include <iostream>

#include "poincare/cli.hpp"

int main(int argc, char** argv) { return poincare::run_cli(argc, argv, std::cout, std::cerr); }
