#include <iostream>

#include "banproj/cli.hpp"

int main(int argc, char** argv) {
  return banproj::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
