#include <iostream>

#include <tcplan/cli.hpp>

int main(int argc, char** argv) { return tcplan::cli::run(argc, argv, std::cout, std::cerr); }
