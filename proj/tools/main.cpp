#include <iostream>

#include "poltel/app/cli.hpp"

int main(int argc, char** argv) { return poltel::app::run_cli(argc, argv, std::cout, std::cerr); }
