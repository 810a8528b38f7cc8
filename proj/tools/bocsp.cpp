#include <iostream>

#include "bocsp/cli.hpp"

int main(int argc, char** argv) { return bocsp::cli::run(argc, argv, std::cout, std::cerr); }
