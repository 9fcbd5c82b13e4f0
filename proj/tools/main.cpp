#include <iostream>

#include "delliptic/cli.hpp"

int main(int argc, char** argv) { return delliptic::cli::run(argc, argv, std::cout, std::cerr); }
