#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cliffcert/clifford.hpp"

namespace cliffcert {

// Floating-point shadow of the exact layer.  Every identity certified
// exactly is re-evaluated here in complex doubles; a disagreement between
// the two layers signals a defect in one of them, so the oracle never
// replaces an exact check and an exact check never excuses a loose oracle.

struct NumericCheck {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

std::complex<double> lower(const Cyc& z);
Eigen::VectorXcd lower(const CycVector& v);
Eigen::MatrixXcd lower(const CycMatrix& m);
Eigen::MatrixXcd lower(const Monomial& m);

// Max absolute entry of m.adjoint()*m - identity.
double unitarity_residual(const Eigen::MatrixXcd& m);

// Deterministic battery over a certification workspace.  tol_single bounds
// identities with O(1) floating point operations per entry, tol_sum bounds
// accumulated sums over group orders up to ~10^4 terms.
std::vector<NumericCheck> cross_check(Workspace& ws, double tol_single = 1e-12,
                                      double tol_sum = 1e-9);

}  // namespace cliffcert
