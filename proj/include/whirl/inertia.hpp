#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <memory>
#include <string>
#include <utility>

#include "whirl/algebra.hpp"
#include "whirl/errors.hpp"

namespace whirl {

/// Inertia operator A: so(n) -> so(n)*, symmetric positive definite.
///
/// Two realizations:
///  - manakov: A^-1 M = UM + MU for a constant SPD matrix U. apply() solves
///    the Sylvester equation by diagonalizing U once and dividing entrywise
///    by (u_i + u_j) in its eigenbasis.
///  - dense:   a d x d SPD matrix on the lexicographic E_ij coordinates,
///    d = n(n-1)/2, acting as A itself.
///
/// Operators are immutable after construction (eigendecompositions and
/// factorizations are cached up front), so all operations are pure and safe
/// to call concurrently.
class InertiaOperator {
public:
  enum class Kind { Dense, Manakov };

  static InertiaOperator Manakov(Mat u) {
    detail::check_square(u, "InertiaOperator::Manakov");
    if ((u - u.transpose()).norm() > 1e-12) {
      throw InvalidValue("InertiaOperator::Manakov: U must be symmetric");
    }
    InertiaOperator op;
    op.kind_ = Kind::Manakov;
    op.n_ = static_cast<int>(u.rows());
    op.u_ = 0.5 * (u + u.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.u_);
    if (es.info() != Eigen::Success) {
      throw SylvesterSolveFailed("InertiaOperator::Manakov: eigendecomposition of U failed");
    }
    op.u_eigvec_ = es.eigenvectors();
    op.u_eigval_ = es.eigenvalues();
    if (op.u_eigval_.minCoeff() <= 0.0) {
      throw SylvesterSolveFailed(
          "InertiaOperator::Manakov: U must be positive definite (min eigenvalue " +
          std::to_string(op.u_eigval_.minCoeff()) + ")");
    }
    return op;
  }

  /// Dense operator on the E_ij coordinates of so(n).
  static InertiaOperator Dense(Eigen::MatrixXd a, int n) {
    InertiaOperator op;
    op.kind_ = Kind::Dense;
    op.n_ = n;
    AlgebraBasis basis(n);
    const int d = basis.dimension();
    if (a.rows() != d || a.cols() != d) {
      throw DimensionMismatch("InertiaOperator::Dense: expected " + std::to_string(d) + "x" +
                              std::to_string(d) + " matrix for n = " + std::to_string(n));
    }
    if ((a - a.transpose()).norm() > 1e-12) {
      throw InvalidValue("InertiaOperator::Dense: matrix must be symmetric");
    }
    op.dense_ = 0.5 * (a + a.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense_);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
      throw InvalidValue("InertiaOperator::Dense: matrix must be positive definite");
    }
    op.llt_ = std::make_shared<Eigen::LLT<Eigen::MatrixXd>>(op.dense_);
    return op;
  }

  /// U = I/2, so that A is the identity (the bi-invariant metric).
  static InertiaOperator BiInvariant(int n) {
    return Manakov(Mat(0.5 * Mat::Identity(n, n)));
  }

  Kind kind() const { return kind_; }
  int dim() const { return n_; }
  const Mat& manakov_u() const { return u_; }
  const Eigen::MatrixXd& dense_matrix() const { return dense_; }

  /// Velocity from momentum: omega = A^-1 m.
  AlgebraElement apply_inverse(const Momentum& m) const {
    detail::check_same_dim(n_, m.dim(), "InertiaOperator::apply_inverse");
    if (kind_ == Kind::Manakov) {
      return AlgebraElement(u_ * m.matrix() + m.matrix() * u_);
    }
    AlgebraBasis basis(n_);
    Eigen::VectorXd c = llt_->solve(basis.coordinates(m.matrix()));
    return AlgebraElement(basis.from_coordinates(c));
  }

  /// Momentum from velocity: m = A omega. For the Manakov kind this solves
  /// the Sylvester equation U M + M U = omega, which has a unique skew
  /// solution because spec(U) > 0.
  Momentum apply(const AlgebraElement& omega) const {
    detail::check_same_dim(n_, omega.dim(), "InertiaOperator::apply");
    if (kind_ == Kind::Manakov) {
      Mat w = u_eigvec_.transpose() * omega.matrix() * u_eigvec_;
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          w(i, j) /= (u_eigval_(i) + u_eigval_(j));
        }
      }
      Mat m = u_eigvec_ * w * u_eigvec_.transpose();
      return Momentum(0.5 * (m - m.transpose().eval()));
    }
    AlgebraBasis basis(n_);
    Eigen::VectorXd c = dense_ * basis.coordinates(omega.matrix());
    return Momentum(basis.from_coordinates(c));
  }

  /// Kinetic energy H = 1/2 (A^-1 m, m).
  double energy(const Momentum& m) const {
    return 0.5 * pairing(m, apply_inverse(m));
  }

private:
  InertiaOperator() = default;

  Kind kind_ = Kind::Manakov;
  int n_ = 0;
  Mat u_;                              // manakov
  Eigen::MatrixXd u_eigvec_;           // manakov cache
  Eigen::VectorXd u_eigval_;           // manakov cache
  Eigen::MatrixXd dense_;              // dense
  std::shared_ptr<Eigen::LLT<Eigen::MatrixXd>> llt_;  // dense cache
};

}  // namespace whirl
