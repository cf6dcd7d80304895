#ifndef SGL_LINALG_HPP
#define SGL_LINALG_HPP

#include <Eigen/Dense>

#include "sgl/chart.hpp"

namespace sgl {

/// Pivot threshold below which a linear system is reported singular.
inline constexpr double kPivotTol = 1e-10;

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Solve A x = b by pivoted elimination; throws SingularMatrix when a
/// pivot falls under the threshold (relative to the largest pivot).
inline Vec solve_linear(const Mat& A, const Vec& b, double pivot_tol = kPivotTol) {
  Eigen::FullPivLU<Mat> lu(A);
  lu.setThreshold(pivot_tol);
  if (!lu.isInvertible())
    throw SingularMatrix("solve_linear: pivot below threshold, system singular");
  return lu.solve(b);
}

inline Mat invert(const Mat& A, double pivot_tol = kPivotTol) {
  Eigen::FullPivLU<Mat> lu(A);
  lu.setThreshold(pivot_tol);
  if (!lu.isInvertible()) throw SingularMatrix("invert: matrix singular");
  return lu.inverse();
}

/// Minimum-norm least-squares solution of A x = b. A system with no
/// equations has the zero vector as its minimum-norm solution.
inline Vec least_squares(const Mat& A, const Vec& b) {
  if (A.rows() == 0) return Vec::Zero(A.cols());
  return A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
}

/// ∞-norm that tolerates empty vectors (0-dimensional charts).
inline double norm_inf(const Vec& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

namespace detail {
// Fix the sign of each column so the entry of largest magnitude is
// positive; keeps SVD-derived bases deterministic.
inline void canonicalize_columns(Mat& B) {
  for (int j = 0; j < B.cols(); ++j) {
    int imax = 0;
    B.col(j).cwiseAbs().maxCoeff(&imax);
    if (B(imax, j) < 0) B.col(j) = -B.col(j);
  }
}
}  // namespace detail

/// Orthonormal basis of ker(A). A map with no equations (zero rows) has
/// full kernel.
inline Mat kernel_basis(const Mat& A, double tol = 1e-9) {
  const int n = static_cast<int>(A.cols());
  if (A.rows() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * std::max(1.0, scale)) ++rank;
  Mat K = svd.matrixV().rightCols(n - rank);
  detail::canonicalize_columns(K);
  return K;
}

/// Orthogonal projector onto ker(A).
inline Mat kernel_projector(const Mat& A, double tol = 1e-9) {
  const Mat K = kernel_basis(A, tol);
  return K * K.transpose();
}

}  // namespace sgl

#endif  // SGL_LINALG_HPP
