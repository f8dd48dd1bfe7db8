#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "whirl/algebra.hpp"
#include "whirl/random.hpp"

namespace whirl_test {

inline double matdist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm();
}

inline whirl::AlgebraElement basis_elem(int n, int i, int j) {
  whirl::Mat e = whirl::Mat::Zero(n, n);
  e(i, j) = 1.0;
  e(j, i) = -1.0;
  return whirl::AlgebraElement(e);
}

inline whirl::Momentum basis_mom(int n, int i, int j) {
  whirl::Mat e = whirl::Mat::Zero(n, n);
  e(i, j) = 1.0;
  e(j, i) = -1.0;
  return whirl::Momentum(e);
}

}  // namespace whirl_test
