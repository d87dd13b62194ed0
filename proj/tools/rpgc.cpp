#include <iostream>

#include "rpgc/cli.hpp"

int main(int argc, char** argv) { return rpgc::cli::dispatch(argc, argv, std::cout, std::cerr); }
