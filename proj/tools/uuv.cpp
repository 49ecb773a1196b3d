#include <iostream>

#include "plotkin/cli.hpp"

int main(int argc, char** argv) { return plotkin::cli::run(argc, argv, std::cout, std::cerr); }
