#include "uavllt_cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return uavllt::cli::run(argc, argv, std::cout, std::cerr); }
