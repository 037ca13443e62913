#include <iostream>

#include "covgerm/cli.hpp"

int main(int argc, char** argv) { return covgerm::run_cli(argc, argv, std::cout, std::cerr); }
