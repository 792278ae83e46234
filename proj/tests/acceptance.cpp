// Runs every acceptance criterion and prints one line per criterion.

#include <iostream>

#include "coarse/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : coarse::run_acceptance()) {
    std::cout << coarse::format_line(r) << std::endl;
    all = all && r.status == coarse::Status::holds;
  }
  std::cout << (all ? "all criteria pass" : "some criteria did not pass") << std::endl;
  return all ? 0 : 1;
}
