#include <iostream>

#include "modloc/cli.hpp"

int main(int argc, char** argv) { return modloc::cli::run(argc, argv, std::cout, std::cerr); }
