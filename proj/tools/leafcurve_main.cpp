#include <iostream>

#include "leafcurve/cli/commands.hpp"

int main(int argc, char** argv) { return leafcurve::cli::run(argc, argv, std::cout, std::cerr); }
