#pragma once

#include "tosca/graph.hpp"

#include <Eigen/Dense>

#include <string_view>

namespace tosca {

//! Probability vector on the vertices.
class Density
{
public:
  Density() = default;

  //! Validates nonnegativity and unit mass (within 1e-12).
  explicit Density(Eigen::VectorXd p);

  static Density uniform(Index n);

  //! Normalizes nonnegative `weights` to unit mass.
  static Density from_weights(const Eigen::VectorXd& weights);

  const Eigen::VectorXd& values() const noexcept { return p_; }
  Index size() const noexcept { return p_.size(); }
  double operator[](Index i) const { return p_[i]; }

  //! Every entry above the 1e-300 floor.
  bool strictly_positive() const;

  //! Index of the first entry at or below the floor, or -1.
  Index first_nonpositive() const;

private:
  Eigen::VectorXd p_;
};

enum class OperatorKind
{
  P,
  K,
  T,
  F,
  B,
  Cxx,
  Cyy,
  Cxy
};

std::string_view to_string(OperatorKind kind);

//! Dense matrix representation of a transfer or covariance operator together
//! with the initial density mu and image density nu it was built from.
struct OperatorMatrix
{
  OperatorKind kind = OperatorKind::K;
  Eigen::MatrixXd m;
  Density mu;
  Density nu;
};

//! nu = S^T mu.
Density image_density(const TransitionMatrix& s, const Density& mu);

//! K = S.
OperatorMatrix koopman(const TransitionMatrix& s);
OperatorMatrix koopman(const TransitionMatrix& s, const Density& mu);

//! P = S^T.
OperatorMatrix perron_frobenius(const TransitionMatrix& s);
OperatorMatrix perron_frobenius(const TransitionMatrix& s, const Density& mu);

//! T = D_nu^{-1} S^T D_mu. Throws NonPositiveDensity unless mu and nu are
//! strictly positive.
OperatorMatrix reweighted(const TransitionMatrix& s, const Density& mu);

//! F = S D_nu^{-1} S^T D_mu (= K T).
OperatorMatrix forward_backward(const TransitionMatrix& s, const Density& mu);

//! B = D_nu^{-1} S^T D_mu S (= T K).
OperatorMatrix backward_forward(const TransitionMatrix& s, const Density& mu);

struct CovarianceMatrices
{
  OperatorMatrix cxx; // D_mu
  OperatorMatrix cyy; // D_nu
  OperatorMatrix cxy; // D_mu S
};

CovarianceMatrices covariance_matrices(const TransitionMatrix& s,
                                       const Density& mu);

//! pi_i = deg(i) / sum_j deg(j) for a graph with symmetric A.
//! Throws NotUndirected or ZeroDegree.
Density stationary_density(const Graph& g);

//! Throws NonPositiveDensity naming `which` ("mu" or "nu") and the first
//! offending vertex.
void require_strictly_positive(const Density& d, std::string_view which);

} // namespace tosca
