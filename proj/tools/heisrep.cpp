#include "heisrep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return heisrep::run_cli(argc, argv, std::cout, std::cerr); }
