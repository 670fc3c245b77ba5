#ifndef HILLWALK_VERIFY_HPP
#define HILLWALK_VERIFY_HPP

#include <string>
#include <vector>

#include "hillwalk/numerics.hpp"

namespace hillwalk {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  // Added to the coefficient a on the enumerated side of the shell-zero
  // check; nonzero values must make that check fail.
  Rational perturbation = 0;
  bool spectral = true;  // include the Galerkin reduction-residual check
};

// Identity and cross-path checks over the beta, walk and spectra code.
std::vector<CheckResult> run_identity_suite(const VerifyOptions& options = {});

}  // namespace hillwalk

#endif  // HILLWALK_VERIFY_HPP
