#include <vector>

#include "nullforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nullforge::run_command(args);
}
