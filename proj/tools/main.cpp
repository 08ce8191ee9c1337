#include "unimod/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return unimod::run(argc, argv, std::cout, std::cerr); }
