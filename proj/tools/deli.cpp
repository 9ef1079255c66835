#include <iostream>

#include "deli/cli.hpp"

int main(int argc, char** argv) { return deli::cli::run(argc, argv, std::cout, std::cerr); }
