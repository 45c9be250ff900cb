#include <iostream>

#include "qhh/cli.hpp"

int main(int argc, char** argv) {
  return qhh::cli_main(argc, argv, std::cout, std::cerr);
}
