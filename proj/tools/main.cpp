#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  crsym::cli::Outcome out = crsym::cli::run(args);
  if (out.report.is_null()) {
    std::cout << out.help;
  } else {
    std::cout << out.report.dump(2) << "\n";
  }
  return out.code;
}
