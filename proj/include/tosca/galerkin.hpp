#pragma once

#include "tosca/operators.hpp"

#include <span>
#include <vector>

namespace tosca {

//! r basis functions evaluated on the n vertices: column i of `phi_v` is
//! phi(v_i).
struct Basis
{
  Eigen::MatrixXd phi_v;

  Index size() const noexcept { return phi_v.rows(); }
  Index num_vertices() const noexcept { return phi_v.cols(); }
};

//! Row j is the indicator of sets[j]. Throws EmptySet, OverlappingSets or
//! IndexOutOfRange.
Basis indicator_basis(Index n, std::span<const std::vector<Index>> sets);

//! Rows are the given functions (columns of `f`, n x r).
Basis function_basis(const Eigen::MatrixXd& f);

struct ReducedOperator
{
  Eigen::MatrixXd l_r; // g0^{-1} g1
  Eigen::MatrixXd g0;  // Phi D Phi^T
  Eigen::MatrixXd g1;  // Phi D L Phi^T
  Basis basis;
  OperatorKind kind = OperatorKind::K;
  Eigen::VectorXd measure; // diagonal of D
};

//! Galerkin projection onto the span of the basis. D is D_nu for B, T and
//! Cyy and D_mu otherwise. Throws SingularGram when cond(g0) >= 1e12.
ReducedOperator project(const OperatorMatrix& op, const Basis& basis);

struct ReducedEigen
{
  Eigen::VectorXd values;    // descending; real parts on the general path
  Eigen::MatrixXd xi;        // r x k coefficient vectors
  Eigen::MatrixXd functions; // n x k lifted eigenfunctions
};

//! Leading k eigenpairs of l_r. F and B use the symmetric-definite pencil
//! (g1, g0); other kinds use a general eigensolver and keep real parts.
//! Lifted functions have unit norm in the projection measure and carry the
//! same sign convention as fb_spectrum.
ReducedEigen reduced_eigenfunctions(const ReducedOperator& red, Index k);

//! Vertex function xi^T phi(v_i).
Eigen::VectorXd lift(const Basis& basis, const Eigen::VectorXd& xi);

} // namespace tosca
