#ifndef SGL_GROUPOID_LIFTS_HPP
#define SGL_GROUPOID_LIFTS_HPP

#include <memory>
#include <string>
#include <utility>

#include "sgl/algebroid.hpp"
#include "sgl/groupoid.hpp"

namespace sgl {

/// Tangent multiplication T(κ): the derivative of the parent product
/// along the straight chart curves through the two arrows. Valid on
/// tangent-composable inputs because the parent multiply is a smooth
/// extension off the composable set.
inline Vec groupoid_tangent_mul(const GroupoidInstance& G, const Vec& h,
                                const Vec& hdot, const Vec& g, const Vec& gdot,
                                double step = kDefaultStep) {
  return (G.multiply(h + step * hdot, g + step * gdot) -
          G.multiply(h - step * hdot, g - step * gdot)) /
         (2.0 * step);
}

/// Tangent groupoid TG ⇒ TM: arrows [g; ġ], base points [m; ṁ]; every
/// structure map is the chart derivative of the parent's.
class TangentLiftGroupoid : public GroupoidInstance {
 public:
  explicit TangentLiftGroupoid(GroupoidPtr parent, double step = kDefaultStep)
      : GroupoidInstance("t(" + parent->name() + ")"),
        parent_(std::move(parent)),
        step_(step) {}

  std::string kind() const override { return "tangent-lift"; }
  int arrow_dim() const override { return 2 * parent_->arrow_dim(); }
  int base_dim() const override { return 2 * parent_->base_dim(); }
  const GroupoidInstance& parent() const { return *parent_; }
  double composability_tol() const override { return 1e-6; }

  Vec source(const Vec& z) const override {
    const auto [g, gdot] = split_arrow(z);
    return join(parent_->source(g),
                push_forward([this](const Vec& y) { return parent_->source(y); }, g,
                             gdot, step_));
  }
  Vec target(const Vec& z) const override {
    const auto [g, gdot] = split_arrow(z);
    return join(parent_->target(g),
                push_forward([this](const Vec& y) { return parent_->target(y); }, g,
                             gdot, step_));
  }
  Vec identity_arrow(const Vec& mz) const override {
    const int nb = parent_->base_dim();
    const Vec m = mz.head(nb), mdot = mz.tail(nb);
    return join(parent_->identity_arrow(m),
                push_forward([this](const Vec& y) { return parent_->identity_arrow(y); },
                             m, mdot, step_));
  }
  Vec multiply(const Vec& hz, const Vec& gz) const override {
    const auto [h, hdot] = split_arrow(hz);
    const auto [g, gdot] = split_arrow(gz);
    return join(parent_->multiply(h, g),
                groupoid_tangent_mul(*parent_, h, hdot, g, gdot, step_));
  }
  Vec invert(const Vec& z) const override {
    const auto [g, gdot] = split_arrow(z);
    return join(parent_->invert(g),
                push_forward([this](const Vec& y) { return parent_->invert(y); }, g,
                             gdot, step_));
  }

  Vec random_base(Rng& rng) const override {
    return join(parent_->random_base(rng), random_vec(rng, parent_->base_dim()));
  }
  Vec random_arrow(Rng& rng) const override {
    return join(parent_->random_arrow(rng), random_vec(rng, parent_->arrow_dim()));
  }
  Vec random_arrow_at_source(Rng& rng, const Vec& mz) const override {
    const int nb = parent_->base_dim();
    const Vec g = parent_->random_arrow_at_source(rng, mz.head(nb));
    // velocity solving T(α)(ġ) = ṁ, plus a random kernel component
    const Mat ja = source_jacobian(*parent_, g, step_);
    Vec gdot = least_squares(ja, mz.tail(nb));
    const Mat K = kernel_basis(ja);
    if (K.cols() > 0) gdot += K * random_vec(rng, static_cast<int>(K.cols()));
    return join(g, gdot);
  }

  std::pair<Vec, Vec> split_arrow(const Vec& z) const {
    const int na = parent_->arrow_dim();
    return {z.head(na), z.tail(na)};
  }

 private:
  static Vec join(const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size());
    out << a, b;
    return out;
  }

  GroupoidPtr parent_;
  double step_;
};

/// Cotangent groupoid T*Σ ⇒ A*Σ of an arbitrary instance Σ. Arrows are
/// [g; Φ] with Φ a covector on the arrow chart at g; base points are
/// [m; φ] with φ expressed against the orthonormal fibre basis at m.
/// The structure maps are realized numerically through the defining
/// pairings; the closed-form cotangent groupoid of a group is kept as a
/// separate instance and serves as this one's oracle.
class CotangentLiftGroupoid : public GroupoidInstance {
 public:
  explicit CotangentLiftGroupoid(GroupoidPtr parent, double step = kDefaultStep)
      : GroupoidInstance("t*(" + parent->name() + ")"),
        parent_(std::move(parent)),
        step_(step) {
    rank_ = parent_->arrow_dim() - parent_->base_dim();
  }

  std::string kind() const override { return "cotangent-lift"; }
  int arrow_dim() const override { return 2 * parent_->arrow_dim(); }
  int base_dim() const override { return parent_->base_dim() + rank_; }
  const GroupoidInstance& parent() const { return *parent_; }
  int fibre_rank() const { return rank_; }
  double composability_tol() const override { return 1e-6; }

  /// ⟨α̃(Φ), X⟩ = ⟨Φ, T(L_g)(X − T(1)(aX))⟩ over the fibre basis at α(g).
  Vec source(const Vec& z) const override {
    const auto [g, phi] = split_arrow(z);
    const Vec m = parent_->source(g);
    const AlgebroidFibre f = algebroid_fibre(*parent_, m, step_);
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) {
      const Vec xi = f.basis.col(i) - f.id_tangent * f.anchor.col(i);
      out[i] = phi.dot(left_translate(g, m, xi));
    }
    return join(m, out);
  }

  /// ⟨β̃(Φ), Y⟩ = ⟨Φ, T(R_g)(Y)⟩ over the fibre basis at β(g).
  Vec target(const Vec& z) const override {
    const auto [g, phi] = split_arrow(z);
    const Vec m = parent_->target(g);
    const AlgebroidFibre f = algebroid_fibre(*parent_, m, step_);
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i)
      out[i] = phi.dot(right_translate(g, m, f.basis.col(i)));
    return join(m, out);
  }

  /// ⟨1̃_φ, T(1)(x) + X⟩ = ⟨φ, X⟩ through the direct-sum decomposition
  /// of T_{1_m}Σ.
  Vec identity_arrow(const Vec& mz) const override {
    const int nb = parent_->base_dim();
    const Vec m = mz.head(nb);
    const AlgebroidFibre f = algebroid_fibre(*parent_, m, step_);
    const int na = parent_->arrow_dim();
    Mat M(na, na);
    M << f.id_tangent, f.basis;
    Vec rhs(na);
    rhs << Vec::Zero(nb), mz.tail(rank_);
    return join(parent_->identity_arrow(m), solve_linear(M.transpose(), rhs));
  }

  /// ⟨Ψ•Φ, ζ⟩ = ⟨Ψ, ζ•ζ₁⁻¹⟩ + ⟨Φ, ζ₁⟩ where ζ₁ has T(α)(ζ₁) = T(α)(ζ).
  /// The decomposition is not unique; any solution gives the same value
  /// on composable inputs, which the well-definedness checks exercise by
  /// passing a kernel-noise generator.
  Vec multiply(const Vec& hz, const Vec& gz) const override {
    return multiply_seeded(hz, gz, nullptr);
  }

  Vec multiply_seeded(const Vec& hz, const Vec& gz, Rng* kernel_noise) const {
    const auto [h, psi] = split_arrow(hz);
    const auto [g, phi] = split_arrow(gz);
    const int na = parent_->arrow_dim();
    const Vec hg = parent_->multiply(h, g);
    const Mat ja_g = source_jacobian(*parent_, g, step_);
    const Mat ja_hg = source_jacobian(*parent_, hg, step_);
    const Mat jinv_g = invert_jacobian(*parent_, g, step_);
    const Vec ginv = parent_->invert(g);
    const Mat K = kernel_basis(ja_g);
    Vec comp(na);
    for (int k = 0; k < na; ++k) {
      Vec zeta1 = least_squares(ja_g, ja_hg.col(k));
      if (kernel_noise != nullptr && K.cols() > 0)
        zeta1 += K * random_vec(*kernel_noise, static_cast<int>(K.cols()));
      const Vec zeta1_inv = jinv_g * zeta1;
      const Vec zeta2 =
          groupoid_tangent_mul(*parent_, hg, Vec::Unit(na, k), ginv, zeta1_inv, step_);
      comp[k] = psi.dot(zeta2) + phi.dot(zeta1);
    }
    return join(hg, comp);
  }

  /// ⟨Φ⁻¹, ξ⁻¹⟩ = −⟨Φ, ξ⟩, evaluated by pulling the chart basis at g⁻¹
  /// back through the tangent inversion.
  Vec invert(const Vec& z) const override {
    const auto [g, phi] = split_arrow(z);
    const Vec ginv = parent_->invert(g);
    const Mat jinv = invert_jacobian(*parent_, ginv, step_);
    return join(ginv, Vec(-jinv.transpose() * phi));
  }

  Vec random_base(Rng& rng) const override {
    return join(parent_->random_base(rng), random_vec(rng, rank_));
  }
  Vec random_arrow(Rng& rng) const override {
    return join(parent_->random_arrow(rng), random_vec(rng, parent_->arrow_dim()));
  }
  Vec random_arrow_at_source(Rng& rng, const Vec& mz) const override {
    const int nb = parent_->base_dim();
    const Vec m = mz.head(nb);
    const Vec g = parent_->random_arrow_at_source(rng, m);
    const AlgebroidFibre f = algebroid_fibre(*parent_, m, step_);
    Mat U(rank_, parent_->arrow_dim());
    for (int i = 0; i < rank_; ++i) {
      const Vec xi = f.basis.col(i) - f.id_tangent * f.anchor.col(i);
      U.row(i) = left_translate(g, m, xi).transpose();
    }
    Vec phi = least_squares(U, mz.tail(rank_));
    const Mat K = kernel_basis(U);
    if (K.cols() > 0) phi += K * random_vec(rng, static_cast<int>(K.cols()));
    return join(g, phi);
  }

  std::pair<Vec, Vec> split_arrow(const Vec& z) const {
    const int na = parent_->arrow_dim();
    return {z.head(na), z.tail(na)};
  }

 private:
  /// T(L_g)(ξ) for ξ ∈ T_{1_{α(g)}} with T(β)(ξ) = 0: the product 0_g • ξ.
  Vec left_translate(const Vec& g, const Vec& m, const Vec& xi) const {
    const Vec id = parent_->identity_arrow(m);
    return (parent_->multiply(g, id + step_ * xi) -
            parent_->multiply(g, id - step_ * xi)) /
           (2.0 * step_);
  }

  /// T(R_g)(Y) for Y ∈ A_{β(g)}: the product Y • 0_g.
  Vec right_translate(const Vec& g, const Vec& m, const Vec& Y) const {
    const Vec id = parent_->identity_arrow(m);
    return (parent_->multiply(id + step_ * Y, g) -
            parent_->multiply(id - step_ * Y, g)) /
           (2.0 * step_);
  }

  static Vec join(const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size());
    out << a, b;
    return out;
  }

  GroupoidPtr parent_;
  double step_;
  int rank_;
};

}  // namespace sgl

#endif  // SGL_GROUPOID_LIFTS_HPP
