#include <iostream>

#include "polytrav/cli.hpp"

int main(int argc, char** argv) { return polytrav::run_cli(argc, argv, std::cout, std::cerr); }
