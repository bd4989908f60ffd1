#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return antimagic::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
