#include <iostream>

#include "cat3/cli.hpp"

int main(int argc, char** argv) {
  return cat3::cli_main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
