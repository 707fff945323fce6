#include <string>
#include <vector>

#include "graphonlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphonlab::run_cli(args);
}
