#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return bipsym::cli_main({argv, argv + argc}, std::cout, std::cerr);
}
