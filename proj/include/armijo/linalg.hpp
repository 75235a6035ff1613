#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace armijo {

/// Dense symmetric k x k matrix. The constructor symmetrizes its input as
/// (H + H^T) / 2, so H(i, j) == H(j, i) holds bit-for-bit afterwards.
template <typename Scalar = double>
class SymmetricMatrix {
 public:
  using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SymmetricMatrix() = default;

  template <typename Derived>
  explicit SymmetricMatrix(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("SymmetricMatrix: input is not square");
    }
    const MatrixType dense = m;
    m_ = (dense + dense.transpose()) * Scalar(0.5);
  }

  static SymmetricMatrix Zero(Eigen::Index k) { return SymmetricMatrix(MatrixType::Zero(k, k)); }
  static SymmetricMatrix Identity(Eigen::Index k) {
    return SymmetricMatrix(MatrixType::Identity(k, k));
  }

  Eigen::Index dim() const { return m_.rows(); }
  const MatrixType& matrix() const { return m_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  MatrixType m_;
};

namespace detail {

template <typename Scalar>
Scalar power_iteration_norm(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& h,
                            Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v, Scalar tol,
                            int max_iters) {
  using std::abs;
  using std::sqrt;
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h2 = h * h;
  v.normalize();
  Scalar mu = v.dot(h2 * v);
  for (int it = 0; it < max_iters; ++it) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w = h2 * v;
    const Scalar wn = w.norm();
    if (wn == Scalar(0)) return Scalar(0);  // v lies in the null space
    v = w / wn;
    const Scalar next = v.dot(h2 * v);
    const Scalar residual = (h2 * v - next * v).norm();
    const bool converged =
        abs(next - mu) <= tol * abs(next) && residual <= tol * abs(next);
    mu = next;
    if (converged) break;
  }
  // ||H v|| for unit v is sqrt(v^T H^2 v).
  return sqrt(std::max(mu, Scalar(0)));
}

}  // namespace detail

/// Spectral norm max |lambda| of a symmetric matrix. Closed form for k <= 2;
/// power iteration on H^2 otherwise.
template <typename Derived>
typename Derived::Scalar operator_norm(const Eigen::MatrixBase<Derived>& h,
                                       typename Derived::Scalar tol = 1e-10,
                                       int max_iters = 10000) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::hypot;
  const Eigen::Index k = h.rows();
  if (k == 0) return Scalar(0);
  if (k == 1) return abs(h(0, 0));
  if (k == 2) {
    const Scalar mid = (h(0, 0) + h(1, 1)) / Scalar(2);
    const Scalar radius = hypot((h(0, 0) - h(1, 1)) / Scalar(2), h(0, 1));
    return abs(mid) + radius;
  }
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense = h;
  if (dense.isZero(0)) return Scalar(0);

  // The all-ones start can be orthogonal to the dominant eigenvector; a second
  // deterministic, irregular start covers that case.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> ones = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Ones(k);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> alt(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    alt(i) = Scalar(1) + Scalar(i) * Scalar(0.6180339887498949) + Scalar(i * i) * Scalar(0.1);
  }
  const Scalar a = detail::power_iteration_norm<Scalar>(dense, ones, tol, max_iters);
  const Scalar b = detail::power_iteration_norm<Scalar>(dense, alt, tol, max_iters);
  return std::max(a, b);
}

template <typename Scalar>
Scalar operator_norm(const SymmetricMatrix<Scalar>& h, Scalar tol = 1e-10) {
  return operator_norm(h.matrix(), tol);
}

/// Inverse by LU with partial pivoting. Returns std::nullopt (degenerate) on an
/// exact zero pivot or when min|lambda| / max|lambda| < cond_tol.
template <typename Scalar>
std::optional<SymmetricMatrix<Scalar>> invert(const SymmetricMatrix<Scalar>& h,
                                              Scalar cond_tol = 1e-12) {
  using MatrixType = typename SymmetricMatrix<Scalar>::MatrixType;
  const Eigen::Index k = h.dim();
  if (k == 0) return std::nullopt;
  const Eigen::PartialPivLU<MatrixType> lu(h.matrix());
  const auto diag = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < k; ++i) {
    if (diag(i) == Scalar(0)) return std::nullopt;
  }
  const MatrixType inv = lu.inverse();
  if (!inv.allFinite()) return std::nullopt;
  SymmetricMatrix<Scalar> result(inv);
  // For symmetric H, ||H|| * ||H^-1|| = max|lambda| / min|lambda|.
  const Scalar ratio = Scalar(1) / (operator_norm(h) * operator_norm(result));
  if (!(ratio >= cond_tol)) return std::nullopt;
  return result;
}

}  // namespace armijo
