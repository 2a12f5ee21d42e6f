#include <iostream>

#include "distpoly/cli.hpp"

int main(int argc, char** argv) {
  return distpoly::cli_main(argc, argv, std::cout, std::cerr);
}
