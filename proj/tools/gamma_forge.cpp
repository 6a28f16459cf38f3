#include "gforge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gforge::cli::main_entry(argc, argv, std::cout, std::cerr); }
