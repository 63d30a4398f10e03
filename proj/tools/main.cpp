#include <iostream>

#include "zeta_arr/commands.hpp"

int main(int argc, char** argv) { return zeta_arr::run_cli(argc, argv, std::cout, std::cerr); }
