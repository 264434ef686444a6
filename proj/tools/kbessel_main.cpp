#include <iostream>

#include "kbessel/cli.hpp"

int main(int argc, char** argv) { return kbessel::run_cli(argc, argv, std::cout, std::cerr); }
