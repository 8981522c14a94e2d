#include <minktrig_cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return minktrig::cli::run(argc, argv, std::cout, std::cerr); }
