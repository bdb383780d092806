#include "quartic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return quartic::cli::run(argc, argv, std::cout, std::cerr); }
