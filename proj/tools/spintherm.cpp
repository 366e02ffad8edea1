#include <iostream>

#include "spintherm/cli/app.hpp"

int main(int argc, char** argv) { return spintherm::cli::run(argc, argv, std::cout, std::cerr); }
