#include <iostream>

#include "vrq/cli.hpp"

int main(int argc, char** argv) { return vrq::cli::main_entry(argc, argv, std::cout, std::cerr); }
