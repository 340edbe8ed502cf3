#include <iostream>

#include "areakin/cli.hpp"

int main(int argc, char** argv) { return areakin::cli_main(argc, argv, std::cout, std::cerr); }
