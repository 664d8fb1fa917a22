#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return bintab::cli::run(argc, argv, std::cout, std::cerr); }
