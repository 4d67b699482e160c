#include <iostream>

#include "fieldbound/cli.hpp"

int main(int argc, char** argv) { return fieldbound::run_cli(argc, argv, std::cout, std::cerr); }
