#ifndef SGL_ALGEBROID_HPP
#define SGL_ALGEBROID_HPP

#include <functional>
#include <utility>
#include <vector>

#include "sgl/calculus.hpp"
#include "sgl/groupoid.hpp"
#include "sgl/linalg.hpp"

namespace sgl {

inline Mat source_jacobian(const GroupoidInstance& G, const Vec& g,
                           double step = kDefaultStep) {
  return jacobian([&G](const Vec& y) { return G.source(y); }, g, step);
}

inline Mat target_jacobian(const GroupoidInstance& G, const Vec& g,
                           double step = kDefaultStep) {
  return jacobian([&G](const Vec& y) { return G.target(y); }, g, step);
}

inline Mat identity_jacobian(const GroupoidInstance& G, const Vec& m,
                             double step = kDefaultStep) {
  return jacobian([&G](const Vec& y) { return G.identity_arrow(y); }, m, step);
}

inline Mat invert_jacobian(const GroupoidInstance& G, const Vec& g,
                           double step = kDefaultStep) {
  return jacobian([&G](const Vec& y) { return G.invert(y); }, g, step);
}

/// The fibre A_m = ker T(α) ∩ T_{1_m}G of the Lie algebroid of G, with an
/// orthonormal basis, the anchor values T(β)·basis, and the tangent of the
/// identity section. Computed per point; deterministic for fixed inputs.
struct AlgebroidFibre {
  Vec m;
  Mat basis;       // arrow_dim × rank, orthonormal columns spanning ker T(α)
  Mat anchor;      // base_dim × rank
  Mat id_tangent;  // arrow_dim × base_dim, T(1) at m

  int rank() const { return static_cast<int>(basis.cols()); }

  /// Decompose ξ ∈ T_{1_m}G uniquely as T(1)(x) + X; returns (x, X-coeffs).
  std::pair<Vec, Vec> split(const Vec& xi) const {
    const int nb = static_cast<int>(id_tangent.cols());
    Mat M(xi.size(), nb + rank());
    M << id_tangent, basis;
    const Vec c = solve_linear(M, xi);
    return {c.head(nb), c.tail(rank())};
  }
};

inline AlgebroidFibre algebroid_fibre(const GroupoidInstance& G, const Vec& m,
                                      double step = kDefaultStep) {
  AlgebroidFibre f;
  f.m = m;
  const Vec id = G.identity_arrow(m);
  const Mat ja = source_jacobian(G, id, step);
  f.basis = kernel_basis(ja);
  if (f.basis.cols() != G.arrow_dim() - G.base_dim())
    throw Error("algebroid_fibre: kernel rank defect at a base point of " + G.name());
  f.anchor = target_jacobian(G, id, step) * f.basis;
  f.id_tangent = identity_jacobian(G, m, step);
  return f;
}

/// Right-invariant extension of a local section X of AG, evaluated at the
/// arrow g: X(βg) • 0_g, the derivative of t ↦ (1_{βg} + t X(βg)) · g.
inline Vec right_invariant_extension(const GroupoidInstance& G,
                                     const std::function<Vec(const Vec&)>& section,
                                     const Vec& g, double step = kDefaultStep) {
  const Vec m = G.target(g);
  const Vec id = G.identity_arrow(m);
  const Vec X = section(m);
  return (G.multiply(id + step * X, g) - G.multiply(id - step * X, g)) / (2.0 * step);
}

/// Bracket of two local sections of AG at m: the chart vector-field
/// bracket of their right-invariant extensions, restricted to 1_m. The
/// outer differentiation uses a coarser step since the extensions are
/// themselves finite-difference values.
inline Vec algebroid_section_bracket(const GroupoidInstance& G,
                                     const std::function<Vec(const Vec&)>& X,
                                     const std::function<Vec(const Vec&)>& Y,
                                     const Vec& m, double inner_step = kDefaultStep,
                                     double outer_step = 3e-4) {
  const Vec id = G.identity_arrow(m);
  auto RX = [&](const Vec& g) { return right_invariant_extension(G, X, g, inner_step); };
  auto RY = [&](const Vec& g) { return right_invariant_extension(G, Y, g, inner_step); };
  const Vec vx = RX(id);
  const Vec vy = RY(id);
  const Vec dyx = (RY(id + outer_step * vx) - RY(id - outer_step * vx)) / (2.0 * outer_step);
  const Vec dxy = (RX(id + outer_step * vy) - RX(id - outer_step * vy)) / (2.0 * outer_step);
  return dyx - dxy;
}

/// Smooth local frame of AG anchored at a reference base point: the
/// reference fibre basis projected orthogonally onto nearby kernels. Used
/// wherever algebroid data has to be differentiated in the base point.
class AlgebroidFrame {
 public:
  AlgebroidFrame(GroupoidPtr G, Vec m_ref, double step = kDefaultStep)
      : G_(std::move(G)), step_(step) {
    ref_ = algebroid_fibre(*G_, m_ref, step_);
  }

  int rank() const { return ref_.rank(); }
  const AlgebroidFibre& reference() const { return ref_; }

  Mat basis_at(const Vec& m) const {
    const Vec id = G_->identity_arrow(m);
    const Mat P = kernel_projector(source_jacobian(*G_, id, step_));
    return P * ref_.basis;
  }

  Mat anchor_at(const Vec& m) const {
    return target_jacobian(*G_, G_->identity_arrow(m), step_) * basis_at(m);
  }

  std::function<Vec(const Vec&)> section(int i) const {
    const AlgebroidFrame* self = this;
    return [self, i](const Vec& m) { return Vec(self->basis_at(m).col(i)); };
  }

  /// Structure functions of the frame at m: [X_i, X_j](m) = Σ_k C^k_ij X_k.
  /// Returned as one rank×rank antisymmetric matrix per k.
  std::vector<Mat> structure_functions_at(const Vec& m) const {
    const int r = rank();
    const Mat B = basis_at(m);
    std::vector<Mat> C(r, Mat::Zero(r, r));
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        const Vec br = algebroid_section_bracket(*G_, section(i), section(j), m, step_);
        const Vec coeffs = least_squares(B, br);
        for (int k = 0; k < r; ++k) {
          C[k](i, j) = coeffs[k];
          C[k](j, i) = -coeffs[k];
        }
      }
    return C;
  }

  const GroupoidInstance& groupoid() const { return *G_; }
  double step() const { return step_; }

 private:
  GroupoidPtr G_;
  double step_;
  AlgebroidFibre ref_;
};

}  // namespace sgl

#endif  // SGL_ALGEBROID_HPP
