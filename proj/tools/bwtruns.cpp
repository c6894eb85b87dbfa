#include <iostream>

#include "bwtruns/cli.hpp"

int main(int argc, char** argv) { return bwtruns::cli::run(argc, argv, std::cout, std::cerr); }
