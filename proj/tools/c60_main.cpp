#include <iostream>

#include "c60/cli.hpp"

int main(int argc, char** argv) { return c60::cli::main_entry(argc, argv, std::cout, std::cerr); }
