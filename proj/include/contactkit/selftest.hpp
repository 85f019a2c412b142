#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "contactkit/germ.hpp"

namespace contactkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the ten-criterion verification suite, printing one line per criterion.
// Returns the number of failures. Seeded from CONTACTKIT_SEED when set.
int run_acceptance(std::ostream& out);
std::vector<CriterionResult> run_acceptance_collect(std::uint64_t seed);

// Independent oracles used by the suite (definitional, not sharing code with
// the production routines they check).
Series pf_reference(const SkewMatrix& w);                      // permutation sum
Series det_reference(const std::vector<Series>& entries, int n, int k, int precision);

// Shared worked germs.
ContactGerm example1_germ(int precision);  // alpha = e^{x1 x2} dx1, beta = -x1 dx2
ContactGerm example2_germ(int precision);  // alpha = e^{-x1 x2}/(x2+1) dx1, beta = (x1 + 1/(x2+1)) dx2

}  // namespace contactkit
