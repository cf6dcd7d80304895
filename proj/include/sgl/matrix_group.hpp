#ifndef SGL_MATRIX_GROUP_HPP
#define SGL_MATRIX_GROUP_HPP

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sgl/calculus.hpp"
#include "sgl/lie_algebra.hpp"
#include "sgl/linalg.hpp"

namespace sgl {

/// Concrete matrix Lie group: exact group operations, an exponential
/// reference chart x ↦ g0·exp(Σ x_i E_i), and the adjoint/coadjoint
/// machinery. Covectors are handled right-trivialized throughout:
/// φ_g(V) = ⟨μ, V g⁻¹⟩.
class MatrixLieGroup {
 public:
  MatrixLieGroup(std::string name, LieAlgebra algebra, std::vector<Mat> basis,
                 std::function<double(const Mat&)> membership_defect)
      : name_(std::move(name)),
        algebra_(std::move(algebra)),
        basis_(std::move(basis)),
        membership_defect_(std::move(membership_defect)) {
    if (static_cast<int>(basis_.size()) != algebra_.dim())
      throw Error("MatrixLieGroup " + name_ + ": basis size mismatch");
    m_ = static_cast<int>(basis_[0].rows());
    basis_mat_.resize(m_ * m_, dim());
    for (int i = 0; i < dim(); ++i)
      basis_mat_.col(i) = Eigen::Map<const Vec>(basis_[i].data(), m_ * m_);
    g0_ = Mat::Identity(m_, m_);
    validate();
  }

  // --- catalog -------------------------------------------------------

  /// Translations of R^n as (n+1)x(n+1) affine matrices.
  static MatrixLieGroup translations(int n) {
    std::vector<Mat> basis;
    for (int i = 0; i < n; ++i) {
      Mat e = Mat::Zero(n + 1, n + 1);
      e(i, n) = 1.0;
      basis.push_back(e);
    }
    auto defect = [n](const Mat& g) {
      Mat d = g;
      d.topLeftCorner(n, n) -= Mat::Identity(n, n);
      d.row(n).head(n).setZero();
      d(n, n) -= 1.0;
      d.col(n).head(n).setZero();
      return d.cwiseAbs().maxCoeff();
    };
    MatrixLieGroup G("r" + std::to_string(n), LieAlgebra::abelian(n),
                     std::move(basis), defect);
    G.global_chart_ = true;
    return G;
  }

  /// Heisenberg group of 3x3 unitriangular matrices.
  static MatrixLieGroup heisenberg() {
    Mat X = Mat::Zero(3, 3), Y = Mat::Zero(3, 3), Z = Mat::Zero(3, 3);
    X(0, 1) = 1.0;
    Y(1, 2) = 1.0;
    Z(0, 2) = 1.0;
    auto defect = [](const Mat& g) {
      Mat d = Mat::Zero(3, 3);
      d(0, 0) = g(0, 0) - 1.0;
      d(1, 1) = g(1, 1) - 1.0;
      d(2, 2) = g(2, 2) - 1.0;
      d(1, 0) = g(1, 0);
      d(2, 0) = g(2, 0);
      d(2, 1) = g(2, 1);
      return d.cwiseAbs().maxCoeff();
    };
    MatrixLieGroup G("heis3", LieAlgebra::heisenberg3(), {X, Y, Z}, defect);
    G.global_chart_ = true;
    return G;
  }

  static MatrixLieGroup so3() {
    Mat E1 = Mat::Zero(3, 3), E2 = Mat::Zero(3, 3), E3 = Mat::Zero(3, 3);
    E1(1, 2) = -1.0;
    E1(2, 1) = 1.0;
    E2(0, 2) = 1.0;
    E2(2, 0) = -1.0;
    E3(0, 1) = -1.0;
    E3(1, 0) = 1.0;
    auto defect = [](const Mat& g) {
      double d = (g.transpose() * g - Mat::Identity(3, 3)).cwiseAbs().maxCoeff();
      if (g.determinant() < 0) d = std::max(d, 2.0);
      return d;
    };
    return MatrixLieGroup("so3", LieAlgebra::so3(), {E1, E2, E3}, defect);
  }

  static MatrixLieGroup sl2() {
    Mat H(2, 2), E(2, 2), F(2, 2);
    H << 1, 0, 0, -1;
    E << 0, 1, 0, 0;
    F << 0, 0, 1, 0;
    auto defect = [](const Mat& g) { return std::abs(g.determinant() - 1.0); };
    return MatrixLieGroup("sl2", LieAlgebra::sl2(), {H, E, F}, defect);
  }

  // --- basic data ----------------------------------------------------

  const std::string& name() const { return name_; }
  int matrix_size() const { return m_; }
  int dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<Mat>& algebra_basis() const { return basis_; }

  const Mat& reference() const { return g0_; }
  void set_reference(const Vec& coords) { g0_ = chart_at_identity(coords); }

  double membership_defect(const Mat& g) const { return membership_defect_(g); }
  bool is_member(const Mat& g, double tol = 1e-9) const {
    return membership_defect_(g) <= tol;
  }

  // --- group operations ----------------------------------------------

  Mat multiply(const Mat& a, const Mat& b) const { return a * b; }
  Mat inverse(const Mat& g) const {
    Eigen::FullPivLU<Mat> lu(g);
    if (!lu.isInvertible())
      throw Error("MatrixLieGroup " + name_ + ": singular element (corrupt data)");
    return lu.inverse();
  }
  Mat identity() const { return Mat::Identity(m_, m_); }

  // --- algebra coordinates -------------------------------------------

  Mat algebra_matrix(const Vec& x) const {
    Mat W = Mat::Zero(m_, m_);
    for (int i = 0; i < dim(); ++i) W += x[i] * basis_[i];
    return W;
  }

  /// Coordinates of a matrix in the algebra basis; rejects matrices that
  /// leave the span (which would signal a broken catalog entry).
  Vec algebra_coords(const Mat& W, double tol = 1e-9) const {
    const Vec w = Eigen::Map<const Vec>(W.data(), m_ * m_);
    const Vec x = least_squares(basis_mat_, w);
    if ((basis_mat_ * x - w).cwiseAbs().maxCoeff() > tol)
      throw Error("MatrixLieGroup " + name_ + ": matrix outside algebra span");
    return x;
  }

  // --- chart ----------------------------------------------------------

  Mat chart(const Vec& x) const { return g0_ * algebra_matrix(x).exp(); }

  /// Inverse chart by matrix logarithm. Where the exponential is not a
  /// global diffeomorphism (so3, sl2) the inverse scaling-and-squaring log
  /// is only trusted near the reference point, guarded by ‖g − g0‖ < 1.
  Vec chart_inverse(const Mat& g, double tol = 1e-9) const {
    if (!global_chart_ && (g - g0_).norm() >= 1.0)
      throw Error("MatrixLieGroup " + name_ + ": point outside chart domain");
    const Mat L = Mat(inverse(g0_) * g).log();
    return algebra_coords(L, tol);
  }

  // --- adjoint machinery ----------------------------------------------

  /// Coordinate matrix of Ad_g: X ↦ g X g⁻¹.
  Mat Ad(const Mat& g) const {
    const Mat ginv = inverse(g);
    Mat out(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      out.col(i) = algebra_coords(g * basis_[i] * ginv);
    return out;
  }

  Vec Ad(const Mat& g, const Vec& X) const { return Ad(g) * X; }

  /// Coadjoint action g·θ = θ∘Ad_{g⁻¹}.
  Covec coadjoint(const Mat& g, const Covec& theta) const {
    return Ad(inverse(g)).transpose() * theta;
  }

  /// Right-trivialized chart differential Q(x): the velocity of
  /// t ↦ chart(x + t ẋ) satisfies ġ g⁻¹ = algebra_matrix(Q(x) ẋ). The
  /// convergent series Σ ad^k/(k+1)! evaluates this to machine precision.
  Mat chart_right_trivialized(const Vec& x) const {
    const Mat adx = algebra_.ad(x);
    Mat term = Mat::Identity(dim(), dim());
    Mat sum = term;
    for (int k = 1; k < 40; ++k) {
      term = (adx * term) / static_cast<double>(k + 1);
      sum += term;
      if (term.cwiseAbs().maxCoeff() < 1e-17) break;
    }
    if (!g0_.isIdentity(0.0)) return Ad(g0_) * sum;
    return sum;
  }

 private:
  Mat chart_at_identity(const Vec& x) const { return algebra_matrix(x).exp(); }

  void validate() const {
    // catalog consistency: matrix commutators reproduce the constants
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        const Mat comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
        const Vec expect = algebra_.bracket(Vec::Unit(dim(), i), Vec::Unit(dim(), j));
        if ((comm - algebra_matrix(expect)).cwiseAbs().maxCoeff() > 1e-12)
          throw Error("MatrixLieGroup " + name_ +
                      ": commutators disagree with structure constants");
      }
  }

  std::string name_;
  LieAlgebra algebra_;
  std::vector<Mat> basis_;
  std::function<double(const Mat&)> membership_defect_;
  int m_ = 0;
  Mat basis_mat_;  // vectorized basis, m²×n
  Mat g0_;
  bool global_chart_ = false;  // exp is a global diffeomorphism (nilpotent/abelian)
};

/// Group element: a matrix known to satisfy the membership predicate.
struct GroupElement {
  const MatrixLieGroup* group;
  Mat m;

  GroupElement(const MatrixLieGroup& g, Mat mat, double tol = 1e-9)
      : group(&g), m(std::move(mat)) {
    if (!g.is_member(m, tol))
      throw Error("GroupElement: membership defect above tolerance for " + g.name());
  }
};

/// Tangent vector at a group element, stored as the raw matrix velocity.
struct GroupTangent {
  GroupElement base;
  Mat velocity;

  /// Right-trivialized part W = V g⁻¹ in algebra coordinates.
  Vec right_trivialized() const {
    return base.group->algebra_coords(velocity * base.group->inverse(base.m));
  }
};

/// Right-trivialized covector at a group element: φ(V) = ⟨μ, V g⁻¹⟩.
struct GroupCovector {
  GroupElement base;
  Covec mu;

  double operator()(const GroupTangent& xi) const {
    return mu.dot(xi.right_trivialized());
  }
};

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group) throw Error("mul: elements from different groups");
  return {*a.group, a.group->multiply(a.m, b.m)};
}

inline GroupElement inv(const GroupElement& a) {
  return {*a.group, a.group->inverse(a.m)};
}

inline GroupElement identity_element(const MatrixLieGroup& g) {
  return {g, g.identity()};
}

/// T(L_h): velocity V at g goes to h·V at hg.
inline GroupTangent tangent_translate_left(const GroupElement& h, const GroupTangent& xi) {
  if (h.group != xi.base.group) throw Error("tangent_translate_left: group mismatch");
  return {mul(h, xi.base), h.m * xi.velocity};
}

/// T(R_g): velocity V at h goes to V·g at hg.
inline GroupTangent tangent_translate_right(const GroupElement& g, const GroupTangent& xi) {
  if (g.group != xi.base.group) throw Error("tangent_translate_right: group mismatch");
  return {mul(xi.base, g), xi.velocity * g.m};
}

/// Tangent group multiplication T(κ)(Y, X) = T(L_h)(X) + T(R_g)(Y) for
/// Y at h and X at g.
inline GroupTangent tangent_group_mul(const GroupTangent& Y, const GroupTangent& X) {
  if (Y.base.group != X.base.group) throw Error("tangent_group_mul: group mismatch");
  return {mul(Y.base, X.base), Y.base.m * X.velocity + Y.velocity * X.base.m};
}

}  // namespace sgl

#endif  // SGL_MATRIX_GROUP_HPP
