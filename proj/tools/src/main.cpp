#include <iostream>

#include "bnpg_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return bnpg::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
