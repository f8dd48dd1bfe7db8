#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "whirl/algebra.hpp"

namespace whirl {

/// Seeded generator for reproducible experiments. All randomness in the
/// library and the CLI flows through explicit seeds; there is no ambient RNG.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  std::uint64_t next_seed() { return gen_(); }

private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline Mat random_skew(Rng& rng, int n, double scale = 1.0) {
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = scale * rng.normal();
      m(i, j) = v;
      m(j, i) = -v;
    }
  }
  return m;
}

inline AlgebraElement random_algebra(Rng& rng, int n, double scale = 1.0) {
  return AlgebraElement(random_skew(rng, n, scale));
}

inline Momentum random_momentum(Rng& rng, int n, double scale = 1.0) {
  return Momentum(random_skew(rng, n, scale));
}

/// Haar-ish random rotation: QR of a Gaussian matrix with sign/determinant fix.
inline GroupElement random_rotation(Rng& rng, int n) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = rng.normal();
    }
  }
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  Mat r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    if (r(k, k) < 0.0) q.col(k) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return GroupElement(q);
}

/// Random symmetric positive definite matrix with spectrum in [lo, hi].
inline Eigen::MatrixXd random_spd(Rng& rng, int n, double lo = 0.5, double hi = 2.0) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = rng.normal();
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd eig(n);
  for (int k = 0; k < n; ++k) {
    eig(k) = rng.uniform(lo, hi);
  }
  return q * eig.asDiagonal() * q.transpose();
}

}  // namespace whirl
