#include <iostream>

#include "shadowlab/cli.hpp"

int main(int argc, char** argv) { return shadowlab::cli::run(argc, argv, std::cout, std::cerr); }
