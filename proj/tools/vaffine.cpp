#include "vaffine/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vaffine::cli::run(argc, argv, std::cout, std::cerr); }
