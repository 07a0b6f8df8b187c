#include <iostream>

#include "nichols/cli.hpp"

int main(int argc, char** argv) { return nichols::run_cli(argc, argv, std::cout, std::cerr); }
