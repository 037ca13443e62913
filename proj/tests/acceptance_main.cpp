#include <iostream>

#include "covgerm/acceptance.hpp"
#include "covgerm/verify.hpp"

int main() {
  auto results = covgerm::run_acceptance(covgerm::kDefaultSeed);
  covgerm::print_acceptance(results, std::cout, std::cerr);
  return covgerm::acceptance_ok(results) ? 0 : 1;
}
