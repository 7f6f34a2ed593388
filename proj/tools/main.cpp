#include "amkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return amkit::run_cli(argc, argv, std::cout, std::cerr); }
