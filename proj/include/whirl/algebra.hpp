#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "whirl/errors.hpp"

namespace whirl {

// Dense kernel for SO(n)/so(n), n <= 12. Matrices are stack-allocated up to
// the envelope; anything larger is rejected at construction.
inline constexpr int kMaxDim = 12;

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

namespace tol {
inline constexpr double kSkew = 1e-12;   // construction tolerance for skew matrices
inline constexpr double kOrth = 1e-10;   // construction tolerance for rotations
}  // namespace tol

namespace detail {

inline void check_square(const Eigen::Ref<const Eigen::MatrixXd>& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvalidValue(std::string(who) + ": matrix must be square and nonempty");
  }
  if (m.rows() > kMaxDim) {
    throw InvalidValue(std::string(who) + ": dimension " + std::to_string(m.rows()) +
                       " exceeds supported envelope n <= " + std::to_string(kMaxDim));
  }
}

inline void check_same_dim(int a, int b, const char* who) {
  if (a != b) {
    throw DimensionMismatch(std::string(who) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

/// Element of the Lie algebra so(n): a skew-symmetric n-by-n matrix.
class AlgebraElement {
public:
  explicit AlgebraElement(Mat m, double skew_tol = tol::kSkew) : m_(std::move(m)) {
    detail::check_square(m_, "AlgebraElement");
    const double defect = (m_ + m_.transpose()).norm();
    if (!(defect <= skew_tol)) {
      throw InvalidValue("AlgebraElement: skew-symmetry defect " + std::to_string(defect) +
                         " exceeds tolerance");
    }
    m_ = 0.5 * (m_ - m_.transpose().eval());  // symmetrize away representable noise
  }

  static AlgebraElement Zero(int n) { return AlgebraElement(Mat::Zero(n, n)); }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }

  AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(m_ + o.m_); }
  AlgebraElement operator-(const AlgebraElement& o) const { return AlgebraElement(m_ - o.m_); }
  AlgebraElement operator-() const { return AlgebraElement(-m_); }
  AlgebraElement operator*(double s) const { return AlgebraElement(m_ * s); }

private:
  Mat m_;
};

inline AlgebraElement operator*(double s, const AlgebraElement& x) { return x * s; }

/// Momentum covector in so(n)*, identified with a skew matrix through the
/// trace pairing (m, xi) = -1/2 tr(m xi).
class Momentum {
public:
  explicit Momentum(Mat m, double skew_tol = tol::kSkew) : m_(std::move(m)) {
    detail::check_square(m_, "Momentum");
    const double defect = (m_ + m_.transpose()).norm();
    if (!(defect <= skew_tol)) {
      throw InvalidValue("Momentum: skew-symmetry defect " + std::to_string(defect) +
                         " exceeds tolerance");
    }
    m_ = 0.5 * (m_ - m_.transpose().eval());
  }

  static Momentum Zero(int n) { return Momentum(Mat::Zero(n, n)); }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }

  Momentum operator+(const Momentum& o) const { return Momentum(m_ + o.m_); }
  Momentum operator-(const Momentum& o) const { return Momentum(m_ - o.m_); }
  Momentum operator-() const { return Momentum(-m_); }
  Momentum operator*(double s) const { return Momentum(m_ * s); }

private:
  Mat m_;
};

inline Momentum operator*(double s, const Momentum& m) { return m * s; }

/// Point of SO(n): an orthogonal n-by-n matrix with positive determinant.
class GroupElement {
public:
  explicit GroupElement(Mat g, double orth_tol = tol::kOrth) : g_(std::move(g)) {
    detail::check_square(g_, "GroupElement");
    const int n = static_cast<int>(g_.rows());
    const double defect = (g_.transpose() * g_ - Mat::Identity(n, n)).norm();
    if (!(defect <= orth_tol)) {
      throw InvalidValue("GroupElement: orthogonality defect " + std::to_string(defect) +
                         " exceeds tolerance");
    }
    if (!(g_.determinant() > 0.0)) {
      throw InvalidValue("GroupElement: determinant must be positive (got det <= 0)");
    }
  }

  static GroupElement Identity(int n) { return GroupElement(Mat::Identity(n, n)); }

  int dim() const { return static_cast<int>(g_.rows()); }
  const Mat& matrix() const { return g_; }

  GroupElement inverse() const { return GroupElement(g_.transpose()); }
  GroupElement operator*(const GroupElement& o) const {
    detail::check_same_dim(dim(), o.dim(), "GroupElement::operator*");
    return GroupElement(g_ * o.g_);
  }

  /// Orthogonality defect, for drift monitoring during integration.
  double orthogonality_defect() const {
    const int n = dim();
    return (g_.transpose() * g_ - Mat::Identity(n, n)).norm();
  }

private:
  Mat g_;
};

/// Trace pairing between momenta and algebra elements. Under this convention
/// the elementary skews E_ij are orthonormal and the pairing of two skews is
/// the dot product of their upper-triangle coordinates.
inline double pairing(const Momentum& m, const AlgebraElement& xi) {
  detail::check_same_dim(m.dim(), xi.dim(), "pairing");
  return -0.5 * (m.matrix() * xi.matrix()).trace();
}

/// Adjoint action ad_xi eta = [xi, eta].
inline AlgebraElement ad(const AlgebraElement& xi, const AlgebraElement& eta) {
  detail::check_same_dim(xi.dim(), eta.dim(), "ad");
  return AlgebraElement(xi.matrix() * eta.matrix() - eta.matrix() * xi.matrix());
}

/// Coadjoint action: the unique p with (p, eta) = (m, [xi, eta]) for all eta.
/// In the matrix realization p = m xi - xi m.
inline Momentum ad_star(const AlgebraElement& xi, const Momentum& m) {
  detail::check_same_dim(xi.dim(), m.dim(), "ad_star");
  return Momentum(m.matrix() * xi.matrix() - xi.matrix() * m.matrix());
}

/// Group adjoint Ad_g xi = g xi g^-1.
inline AlgebraElement Ad(const GroupElement& g, const AlgebraElement& xi) {
  detail::check_same_dim(g.dim(), xi.dim(), "Ad");
  return AlgebraElement(g.matrix() * xi.matrix() * g.matrix().transpose());
}

/// Group coadjoint Ad*_g m = g^-1 m g, the dual of Ad_g under the pairing.
/// Composition is an anti-homomorphism: Ad*_g Ad*_h = Ad*_{hg}.
inline Momentum Ad_star(const GroupElement& g, const Momentum& m) {
  detail::check_same_dim(g.dim(), m.dim(), "Ad_star");
  return Momentum(g.matrix().transpose() * m.matrix() * g.matrix());
}

namespace detail {

/// exp for a skew matrix: Rodrigues for n = 3, otherwise scaling and squaring
/// with a degree-13 Taylor core. Skew input keeps the result orthogonal.
inline Mat expm_skew(const Mat& x) {
  const int n = static_cast<int>(x.rows());
  if (n == 3) {
    // Rodrigues: exp(x) = I + sin(t)/t x + (1-cos(t))/t^2 x^2, t = |axis|.
    const double t = std::sqrt(0.5 * (x.array() * x.array()).sum());
    if (t < 1e-12) {
      return Mat::Identity(3, 3) + x + 0.5 * (x * x);
    }
    const double a = std::sin(t) / t;
    const double b = (1.0 - std::cos(t)) / (t * t);
    return Mat::Identity(3, 3) + a * x + b * (x * x);
  }
  const double nx = x.norm();
  int squarings = 0;
  Mat y = x;
  if (nx > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(nx / 0.5)));
    y = x / std::pow(2.0, squarings);
  }
  Mat acc = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= 13; ++k) {
    term = (term * y / static_cast<double>(k)).eval();
    acc += term;
  }
  for (int s = 0; s < squarings; ++s) {
    acc = (acc * acc).eval();
  }
  return acc;
}

/// Principal logarithm of a special orthogonal matrix via the real Schur
/// form: orthogonal matrices are normal, so the Schur factor is
/// quasi-diagonal with planar rotation blocks. Eigenvalue pairs at -1 are
/// folded into pi-rotations.
inline Mat logm_special_orthogonal(const Mat& g) {
  const int n = static_cast<int>(g.rows());
  Eigen::RealSchur<Eigen::MatrixXd> schur(g);
  const Eigen::MatrixXd t = schur.matrixT();
  const Eigen::MatrixXd q = schur.matrixU();
  Eigen::MatrixXd logt = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> minus_ones;
  int i = 0;
  while (i < n) {
    if (i + 1 < n && std::abs(t(i + 1, i)) > 1e-12) {
      // 2x2 rotation block: angle from the skew part, sign from (i, i+1).
      const double c = 0.5 * (t(i, i) + t(i + 1, i + 1));
      const double s = 0.5 * (t(i, i + 1) - t(i + 1, i));
      const double theta = std::atan2(s, c);
      logt(i, i + 1) = theta;
      logt(i + 1, i) = -theta;
      i += 2;
    } else {
      if (t(i, i) < 0.0) minus_ones.push_back(i);
      i += 1;
    }
  }
  // det = +1 forces an even number of -1 eigenvalues; pair them as
  // pi-rotations (any orthonormal pairing exponentiates back to g).
  for (std::size_t k = 0; k + 1 < minus_ones.size(); k += 2) {
    const int a = minus_ones[k];
    const int b = minus_ones[k + 1];
    logt(a, b) = M_PI;
    logt(b, a) = -M_PI;
  }
  Eigen::MatrixXd out = q * logt * q.transpose();
  return Mat(0.5 * (out - out.transpose()));
}

/// Truncated inverse right-trivialized differential of exp:
/// dexpinv(theta, v) = v - 1/2 [theta, v] + 1/12 [theta, [theta, v]].
/// Accurate enough for fourth-order Munthe-Kaas stepping.
inline Mat dexpinv(const Mat& theta, const Mat& v) {
  Mat c1 = theta * v - v * theta;
  Mat c2 = theta * c1 - c1 * theta;
  return v - 0.5 * c1 + (1.0 / 12.0) * c2;
}

}  // namespace detail

/// Exponential map so(n) -> SO(n).
inline GroupElement group_exp(const AlgebraElement& xi) {
  return GroupElement(detail::expm_skew(xi.matrix()));
}

/// Principal logarithm SO(n) -> so(n); inverse of group_exp for rotation
/// angles below pi.
inline AlgebraElement group_log(const GroupElement& g) {
  return AlgebraElement(detail::logm_special_orthogonal(g.matrix()));
}

/// The ordered basis E_ij = e_i e_j^T - e_j e_i^T, i < j lexicographic, of
/// so(n). Orthonormal under the pairing; fixes the coordinate conventions
/// used for vectorized operators, config files and CSV output.
class AlgebraBasis {
public:
  explicit AlgebraBasis(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) {
      throw InvalidValue("AlgebraBasis: dimension out of range");
    }
    pairs_.reserve(static_cast<std::size_t>(dimension()));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        pairs_.emplace_back(i, j);
      }
    }
  }

  int n() const { return n_; }
  int dimension() const { return n_ * (n_ - 1) / 2; }

  /// (i, j) index pair of the k-th basis element.
  std::pair<int, int> index_pair(int k) const { return pairs_.at(static_cast<std::size_t>(k)); }

  AlgebraElement element(int k) const {
    const auto [i, j] = index_pair(k);
    Mat e = Mat::Zero(n_, n_);
    e(i, j) = 1.0;
    e(j, i) = -1.0;
    return AlgebraElement(e);
  }

  /// Upper-triangle coordinates of a skew matrix in this basis.
  Eigen::VectorXd coordinates(const Mat& skew) const {
    Eigen::VectorXd c(dimension());
    for (int k = 0; k < dimension(); ++k) {
      const auto [i, j] = pairs_[static_cast<std::size_t>(k)];
      c(k) = skew(i, j);
    }
    return c;
  }

  Mat from_coordinates(const Eigen::Ref<const Eigen::VectorXd>& c) const {
    if (c.size() != dimension()) {
      throw DimensionMismatch("AlgebraBasis::from_coordinates: expected " +
                              std::to_string(dimension()) + " coordinates, got " +
                              std::to_string(c.size()));
    }
    Mat m = Mat::Zero(n_, n_);
    for (int k = 0; k < dimension(); ++k) {
      const auto [i, j] = pairs_[static_cast<std::size_t>(k)];
      m(i, j) = c(k);
      m(j, i) = -c(k);
    }
    return m;
  }

private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace whirl
