#pragma once

#include <random>
#include <string>
#include <vector>

#include "epzeta/euler.hpp"

namespace epzeta {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // on failure: the violated identity, instantiated
};

/// Growth-series identities: enumeration agreement, the Bott factorizations,
/// and the coset factorization of the growth series.
std::vector<CheckResult> verify_growth();

/// Euler-characteristic routes: graphs of groups, closed Chevalley forms,
/// chamber-orbit data, non-positivity on randomized unimodular inputs.
std::vector<CheckResult> verify_euler();

/// Zeta identities: tree coefficients and values, chamber/parabolic/pro-p
/// levels, and the Iwahori functional equation.
std::vector<CheckResult> verify_zeta();

/// Hecke-algebra identities: the finite convolution oracle, associativity,
/// the trace properties, idempotents, and Hattori-Stallings ranks.
std::vector<CheckResult> verify_hecke();

std::vector<CheckResult> verify_all();

bool all_passed(const std::vector<CheckResult>& results);

/// Common Coxeter systems used by the suites.
CoxeterSystem system_affine_a1();
CoxeterSystem system_affine_a2();
CoxeterSystem system_a1xa1();
CoxeterSystem system_infinite_triangle();

/// Randomized unimodular, collapse-irreducible, multi-vertex graph of finite
/// groups (all orders declared; every inclusion index >= 2).
GraphOfGroups random_unimodular_gog(std::mt19937& rng);

}  // namespace epzeta
