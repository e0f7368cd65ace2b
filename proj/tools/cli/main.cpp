#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  bool wants_stdin = false;
  for (const auto& a : args) wants_stdin = wants_stdin || a == "-";
  if (wants_stdin) input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());

  auto report = problogic::cli::run(args, input);
  std::cout << report.payload;
  std::cerr << report.message;
  return report.exit_code;
}
