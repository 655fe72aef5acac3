#include <iostream>

#include "scup/cli.hpp"

int main(int argc, char** argv) { return scup::run_cli(argc, argv, std::cout, std::cerr); }
