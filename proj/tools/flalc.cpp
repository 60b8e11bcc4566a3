#include <iostream>

#include "flalc_cli.hpp"

int main(int argc, char** argv) { return flalc::cli::run(argc, argv, std::cout, std::cerr); }
