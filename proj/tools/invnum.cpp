#include <iostream>

#include "invnum/cli.hpp"

int main(int argc, char** argv) { return invnum::run_cli(argc, argv, std::cout, std::cerr); }
