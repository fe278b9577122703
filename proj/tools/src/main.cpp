#include "divlat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return divlat::cli::run(argc, argv, std::cout, std::cerr); }
