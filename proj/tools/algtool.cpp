#include <iostream>

#include "algtool/cli.hpp"

int main(int argc, char** argv) { return algtool::run_cli(argc, argv, std::cout, std::cerr); }
