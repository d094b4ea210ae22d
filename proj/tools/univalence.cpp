#include <iostream>

#include "univalence/cli.hpp"

int main(int argc, char** argv) { return univalence::cli::main_entry(argc, argv, std::cout, std::cerr); }
