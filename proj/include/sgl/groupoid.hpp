#ifndef SGL_GROUPOID_HPP
#define SGL_GROUPOID_HPP

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sgl/calculus.hpp"
#include "sgl/chart.hpp"
#include "sgl/linalg.hpp"
#include "sgl/matrix_group.hpp"

namespace sgl {

/// Uniform arrow-space interface. Arrows and base points are chart
/// coordinate vectors; every structure map is implemented as a smooth
/// total map whose restriction to the composable set is the groupoid
/// operation, so tangent data can be produced by differentiating it
/// along arbitrary curves of composable elements.
class GroupoidInstance {
 public:
  virtual ~GroupoidInstance() = default;

  const std::string& name() const { return name_; }
  virtual std::string kind() const = 0;
  virtual int arrow_dim() const = 0;
  virtual int base_dim() const = 0;

  virtual Vec source(const Vec& g) const = 0;
  virtual Vec target(const Vec& g) const = 0;
  virtual Vec identity_arrow(const Vec& m) const = 0;
  virtual Vec multiply(const Vec& h, const Vec& g) const = 0;
  virtual Vec invert(const Vec& g) const = 0;

  virtual Vec random_base(Rng& rng) const = 0;
  virtual Vec random_arrow(Rng& rng) const = 0;
  /// Random arrow h with source(h) = m, exactly.
  virtual Vec random_arrow_at_source(Rng& rng, const Vec& m) const = 0;

  /// Tolerance for treating a pair as composable: tight for instances
  /// with exact structure maps, looser for finite-difference lifts.
  virtual double composability_tol() const { return 1e-9; }

  double composability_defect(const Vec& h, const Vec& g) const {
    return norm_inf(source(h) - target(g));
  }

  std::pair<Vec, Vec> random_composable_pair(Rng& rng) const {
    const Vec g = random_arrow(rng);
    Vec h = random_arrow_at_source(rng, target(g));
    return {std::move(h), g};
  }

  std::array<Vec, 3> random_composable_triple(Rng& rng) const {
    const Vec f = random_arrow(rng);
    const Vec g = random_arrow_at_source(rng, target(f));
    Vec h = random_arrow_at_source(rng, target(g));
    return {std::move(h), g, f};
  }

 protected:
  explicit GroupoidInstance(std::string name) : name_(std::move(name)) {}

 private:
  std::string name_;
};

using GroupoidPtr = std::shared_ptr<const GroupoidInstance>;

/// Pair groupoid on R^n: arrows (p, m) with target p and source m,
/// (p, n)(n, m) = (p, m).
class PairGroupoid : public GroupoidInstance {
 public:
  explicit PairGroupoid(int n)
      : GroupoidInstance("pair" + std::to_string(n)), n_(n) {}

  std::string kind() const override { return "pair"; }
  int arrow_dim() const override { return 2 * n_; }
  int base_dim() const override { return n_; }

  Vec source(const Vec& g) const override { return g.tail(n_); }
  Vec target(const Vec& g) const override { return g.head(n_); }
  Vec identity_arrow(const Vec& m) const override {
    Vec g(2 * n_);
    g << m, m;
    return g;
  }
  Vec multiply(const Vec& h, const Vec& g) const override {
    Vec out(2 * n_);
    out << h.head(n_), g.tail(n_);
    return out;
  }
  Vec invert(const Vec& g) const override {
    Vec out(2 * n_);
    out << g.tail(n_), g.head(n_);
    return out;
  }

  Vec random_base(Rng& rng) const override { return random_vec(rng, n_); }
  Vec random_arrow(Rng& rng) const override { return random_vec(rng, 2 * n_); }
  Vec random_arrow_at_source(Rng& rng, const Vec& m) const override {
    Vec g(2 * n_);
    g << random_vec(rng, n_), m;
    return g;
  }

 private:
  int n_;
};

enum class ActionKind { Coadjoint, Linear };

/// Action groupoid G ⋉ M: arrows (g, m) in chart coordinates, with
/// α(g,m) = m, β(g,m) = g·m and (h, gm)(g, m) = (hg, m).
class ActionGroupoid : public GroupoidInstance {
 public:
  ActionGroupoid(MatrixLieGroup group, ActionKind kind, double group_radius = 0.1)
      : GroupoidInstance(group.name() +
                         (kind == ActionKind::Coadjoint ? "-coadjoint" : "-linear")),
        group_(std::move(group)),
        kind_(kind),
        radius_(group_radius) {
    mdim_ = kind_ == ActionKind::Coadjoint ? group_.dim() : group_.matrix_size();
  }

  std::string kind() const override { return "action"; }
  int arrow_dim() const override { return group_.dim() + mdim_; }
  int base_dim() const override { return mdim_; }
  const MatrixLieGroup& group() const { return group_; }

  Vec act(const Vec& x, const Vec& m) const {
    const Mat g = group_.chart(x);
    if (kind_ == ActionKind::Coadjoint) return group_.coadjoint(g, m);
    return g * m;
  }

  Vec source(const Vec& z) const override { return z.tail(mdim_); }
  Vec target(const Vec& z) const override {
    return act(z.head(group_.dim()), z.tail(mdim_));
  }
  Vec identity_arrow(const Vec& m) const override {
    Vec z = Vec::Zero(arrow_dim());
    z.tail(mdim_) = m;
    return z;
  }
  Vec multiply(const Vec& h, const Vec& g) const override {
    const Mat prod =
        group_.multiply(group_.chart(h.head(group_.dim())), group_.chart(g.head(group_.dim())));
    Vec out(arrow_dim());
    out << group_.chart_inverse(prod), g.tail(mdim_);
    return out;
  }
  Vec invert(const Vec& z) const override {
    const Vec x = z.head(group_.dim());
    Vec out(arrow_dim());
    out << group_.chart_inverse(group_.inverse(group_.chart(x))), target(z);
    return out;
  }

  Vec random_base(Rng& rng) const override { return random_vec(rng, mdim_); }
  Vec random_arrow(Rng& rng) const override {
    Vec z(arrow_dim());
    z << random_vec(rng, group_.dim(), radius_), random_vec(rng, mdim_);
    return z;
  }
  Vec random_arrow_at_source(Rng& rng, const Vec& m) const override {
    Vec z(arrow_dim());
    z << random_vec(rng, group_.dim(), radius_), m;
    return z;
  }

 private:
  MatrixLieGroup group_;
  ActionKind kind_;
  double radius_;
  int mdim_;
};

/// The groupoid structure on T*G over g*, in right-trivialized
/// coordinates (x, μ) with g = chart(x):
///   β(x, μ) = μ,  α(x, μ) = μ∘Ad_g,
///   (x_h, ν)·(x_g, μ) = (chart⁻¹(hg), ν)  when ν∘Ad_h = μ,
///   (x, μ)⁻¹ = (chart⁻¹(g⁻¹), μ∘Ad_g),  1_μ = (0, μ).
class CotangentGroupGroupoid : public GroupoidInstance {
 public:
  explicit CotangentGroupGroupoid(MatrixLieGroup group, double group_radius = 0.1)
      : GroupoidInstance("t*" + group.name()),
        group_(std::move(group)),
        radius_(group_radius) {}

  std::string kind() const override { return "cotangent-group"; }
  int arrow_dim() const override { return 2 * group_.dim(); }
  int base_dim() const override { return group_.dim(); }
  const MatrixLieGroup& group() const { return group_; }

  Vec source(const Vec& z) const override {
    const int n = group_.dim();
    // μ∘Ad_g pairs as X ↦ ⟨μ, Ad_g X⟩
    return group_.Ad(group_.chart(z.head(n))).transpose() * z.tail(n);
  }
  Vec target(const Vec& z) const override { return z.tail(group_.dim()); }
  Vec identity_arrow(const Vec& mu) const override {
    Vec z = Vec::Zero(2 * group_.dim());
    z.tail(group_.dim()) = mu;
    return z;
  }
  Vec multiply(const Vec& h, const Vec& g) const override {
    const int n = group_.dim();
    const Mat prod = group_.multiply(group_.chart(h.head(n)), group_.chart(g.head(n)));
    Vec out(2 * n);
    out << group_.chart_inverse(prod), h.tail(n);
    return out;
  }
  Vec invert(const Vec& z) const override {
    const int n = group_.dim();
    const Mat g = group_.chart(z.head(n));
    Vec out(2 * n);
    out << group_.chart_inverse(group_.inverse(g)), source(z);
    return out;
  }

  Vec random_base(Rng& rng) const override { return random_vec(rng, group_.dim()); }
  Vec random_arrow(Rng& rng) const override {
    const int n = group_.dim();
    Vec z(2 * n);
    z << random_vec(rng, n, radius_), random_vec(rng, n);
    return z;
  }
  Vec random_arrow_at_source(Rng& rng, const Vec& m) const override {
    const int n = group_.dim();
    const Vec x = random_vec(rng, n, radius_);
    // solve μ∘Ad_g = m for the right-trivialized label μ
    Vec z(2 * n);
    z << x, group_.Ad(group_.inverse(group_.chart(x))).transpose() * m;
    return z;
  }

 private:
  MatrixLieGroup group_;
  double radius_;
};

/// A Lie group seen as a groupoid over the one-point base (an empty
/// chart vector). This is the parent for the generic lifts in the
/// one-point-base cross-checks.
class GroupGroupoid : public GroupoidInstance {
 public:
  explicit GroupGroupoid(MatrixLieGroup group, double group_radius = 0.1)
      : GroupoidInstance("group-" + group.name()),
        group_(std::move(group)),
        radius_(group_radius) {}

  std::string kind() const override { return "group"; }
  int arrow_dim() const override { return group_.dim(); }
  int base_dim() const override { return 0; }
  const MatrixLieGroup& group() const { return group_; }

  Vec source(const Vec&) const override { return Vec(0); }
  Vec target(const Vec&) const override { return Vec(0); }
  Vec identity_arrow(const Vec&) const override { return Vec::Zero(group_.dim()); }
  Vec multiply(const Vec& h, const Vec& g) const override {
    return group_.chart_inverse(
        group_.multiply(group_.chart(h), group_.chart(g)));
  }
  Vec invert(const Vec& g) const override {
    return group_.chart_inverse(group_.inverse(group_.chart(g)));
  }

  Vec random_base(Rng&) const override { return Vec(0); }
  Vec random_arrow(Rng& rng) const override {
    return random_vec(rng, group_.dim(), radius_);
  }
  Vec random_arrow_at_source(Rng& rng, const Vec&) const override {
    return random_arrow(rng);
  }

 private:
  MatrixLieGroup group_;
  double radius_;
};

}  // namespace sgl

#endif  // SGL_GROUPOID_HPP
