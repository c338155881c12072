#include <iostream>

#include "svoa/cli.hpp"

int main(int argc, char** argv) { return svoa::run(argc, argv, std::cout, std::cerr); }
