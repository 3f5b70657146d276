#include <iostream>

#include "clarr/verify.hpp"

int main(int argc, char **argv) {
  bool details = argc > 1 && std::string(argv[1]) == "--details";
  auto cs = clarr::verify::run({1, 2, 3, 4, 5, 6, 7, 8});
  std::cout << clarr::verify::render_text(cs, details);
  for (auto &c : cs)
    if (!c.pass()) return 1;
  return 0;
}
