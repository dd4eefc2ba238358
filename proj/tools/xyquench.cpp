#include <iostream>

#include "xyq/cli.hpp"

int main(int argc, char** argv) { return xyq::cli::run(argc, argv, std::cout, std::cerr); }
