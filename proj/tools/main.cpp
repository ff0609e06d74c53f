#include <iostream>

#include "stab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  stab::CliResult r = stab::run(args);
  if (r.lines) {
    for (const auto& rec : r.output) std::cout << rec.dump() << '\n';
  } else if (r.output.contains("help")) {
    std::cout << r.output["help"].get<std::string>();
  } else {
    std::cout << r.output.dump(2) << '\n';
  }
  return r.exit_code;
}
