#include <iostream>

#include "vafw/cli.hpp"

int main(int argc, char** argv) { return vafw::run_cli(argc, argv, std::cout, std::cerr); }
