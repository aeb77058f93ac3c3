#include <iostream>

#include "bilat/cli.hpp"

int main(int argc, char** argv) { return bilat::run_cli(argc, argv, std::cout, std::cerr); }
