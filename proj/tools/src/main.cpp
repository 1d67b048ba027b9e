#include <iostream>

#include "dspec/cli.hpp"

int main(int argc, char** argv) { return dspec::cli::run(argc, argv, std::cout, std::cerr); }
