#include <iostream>

#include "mogap/cli.hpp"

int main(int argc, char** argv) { return mogap::cli::run(argc, argv, std::cout, std::cerr); }
