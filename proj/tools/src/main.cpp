#include <iostream>

#include "harmonium_cli/cli.hpp"

int main(int argc, char** argv) { return harmonium::cli::main_entry(argc, argv, std::cout, std::cerr); }
