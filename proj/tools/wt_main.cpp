#include <iostream>

#include "wt/cli.hpp"

int main(int argc, char** argv) { return wt::cli::run(argc, argv, std::cout, std::cerr); }
