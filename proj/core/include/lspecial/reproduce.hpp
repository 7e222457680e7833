#ifndef LSPECIAL_REPRODUCE_HPP
#define LSPECIAL_REPRODUCE_HPP

#include <string>
#include <vector>

namespace lspecial {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the full reproduction suite: golden values, root location,
// construction certificate, automorphism laws, nonexistence sweeps,
// existence recovery, gcd/diagonal properties, and trace fidelity.
// Deterministic (fixed RNG seeds).
std::vector<CriterionResult> run_reproduction_suite();

}  // namespace lspecial

#endif  // LSPECIAL_REPRODUCE_HPP
