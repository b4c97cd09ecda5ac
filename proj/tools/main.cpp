#include <iostream>

#include "bpsphere/cli.hpp"

int main(int argc, char** argv) { return bpsphere::cli::main(argc, argv, std::cout, std::cerr); }
