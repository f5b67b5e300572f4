#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>

namespace tosca {

using Index = Eigen::Index;

//! y = A x for a symmetric operator A.
using SymmetricOperator =
  std::function<void(const Eigen::VectorXd& x, Eigen::VectorXd& y)>;

struct LanczosOptions
{
  double tol = 1e-10;      // residual ||A y - theta y|| relative to |theta_1|
  Index max_matvecs = 0;   // 0: 300 * k
  Index subspace = 0;      // 0: min(n, max(2k + 16, k + 48))
  std::uint64_t seed = 0;  // start vector stream
};

struct SymmetricEigenpairs
{
  Eigen::VectorXd values;  // descending
  Eigen::MatrixXd vectors; // orthonormal columns
  Eigen::VectorXd residuals;
  Index matvecs = 0;
  bool converged = false;
};

//! Largest-algebraic eigenpairs by thick-restart Lanczos with full
//! reorthogonalization. Deterministic for fixed options.
SymmetricEigenpairs largest_eigenpairs(const SymmetricOperator& op, Index n,
                                       Index k,
                                       const LanczosOptions& options = {});

} // namespace tosca
