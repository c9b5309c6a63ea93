#include <iostream>

#include "realform/cli.hpp"

int main(int argc, char** argv) { return realform::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
