#include <iostream>

#include "racahlab/cli.hpp"

int main(int argc, char** argv) { return racahlab::cli_main(argc, argv, std::cout, std::cerr); }
