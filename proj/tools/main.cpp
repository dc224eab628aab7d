#include <iostream>

#include "charpoly/cli.hpp"

int main(int argc, char** argv) { return charpoly::run_cli(argc, argv, std::cout, std::cerr); }
