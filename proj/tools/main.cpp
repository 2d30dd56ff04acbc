#include "gsep/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return gsep::cli::run(argc, argv, std::cout, std::cerr); }
