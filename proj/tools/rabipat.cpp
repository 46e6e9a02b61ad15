#include <iostream>

#include "rabipat/cli.hpp"

int main(int argc, char** argv) { return rabipat::cli::main_entry(argc, argv, std::cout, std::cerr); }
