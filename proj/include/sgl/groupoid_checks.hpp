#ifndef SGL_GROUPOID_CHECKS_HPP
#define SGL_GROUPOID_CHECKS_HPP

#include <algorithm>
#include <memory>
#include <utility>

#include "sgl/algebroid.hpp"
#include "sgl/groupoid.hpp"
#include "sgl/groupoid_lifts.hpp"

namespace sgl {

struct AxiomResiduals {
  double associativity = 0.0;
  double left_identity = 0.0;
  double right_identity = 0.0;
  double left_inverse = 0.0;
  double right_inverse = 0.0;
  double source_of_product = 0.0;
  double target_of_product = 0.0;

  double max() const {
    return std::max({associativity, left_identity, right_identity, left_inverse,
                     right_inverse, source_of_product, target_of_product});
  }
};

/// Modified group axioms over seeded samples of composable data:
/// h(gf) = (hg)f, 1_{βg}g = g = g1_{αg}, g⁻¹g = 1_{αg}, gg⁻¹ = 1_{βg},
/// β(hg) = β(h), α(hg) = α(g).
inline AxiomResiduals axiom_residuals(const GroupoidInstance& G, std::uint64_t seed,
                                      int count) {
  AxiomResiduals r;
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto [h, g, f] = G.random_composable_triple(rng);
    r.associativity =
        std::max(r.associativity, norm_inf(G.multiply(G.multiply(h, g), f) -
                                           G.multiply(h, G.multiply(g, f))));
    const Vec hg = G.multiply(h, g);
    r.target_of_product =
        std::max(r.target_of_product, norm_inf(G.target(hg) - G.target(h)));
    r.source_of_product =
        std::max(r.source_of_product, norm_inf(G.source(hg) - G.source(g)));
    r.left_identity = std::max(
        r.left_identity, norm_inf(G.multiply(G.identity_arrow(G.target(g)), g) - g));
    r.right_identity = std::max(
        r.right_identity, norm_inf(G.multiply(g, G.identity_arrow(G.source(g))) - g));
    const Vec ginv = G.invert(g);
    r.left_inverse = std::max(
        r.left_inverse,
        norm_inf(G.multiply(ginv, g) - G.identity_arrow(G.source(g))));
    r.right_inverse = std::max(
        r.right_inverse,
        norm_inf(G.multiply(g, ginv) - G.identity_arrow(G.target(g))));
  }
  return r;
}

/// Linearity of the tangent multiplication (the interchange law):
/// (ξ4+ξ3)•(ξ2+ξ1) = ξ4•ξ2 + ξ3•ξ1 on matched quadruples.
inline double interchange_residual(const TangentLiftGroupoid& TG, std::uint64_t seed,
                                   int count) {
  const GroupoidInstance& P = TG.parent();
  Rng rng(seed);
  const int na = P.arrow_dim();
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const auto [h, g] = P.random_composable_pair(rng);
    const Mat ja_h = source_jacobian(P, h);
    const Mat jb_g = target_jacobian(P, g);
    const Mat K = kernel_basis(ja_h);
    auto matched = [&](const Vec& xi) {
      Vec eta = least_squares(ja_h, jb_g * xi);
      if (K.cols() > 0) eta += K * random_vec(rng, static_cast<int>(K.cols()));
      return eta;
    };
    const Vec xi1 = random_vec(rng, na), xi2 = random_vec(rng, na);
    const Vec xi3 = matched(xi1), xi4 = matched(xi2);
    const Vec lhs = groupoid_tangent_mul(P, h, xi4 + xi3, g, xi2 + xi1);
    const Vec rhs = groupoid_tangent_mul(P, h, xi4, g, xi2) +
                    groupoid_tangent_mul(P, h, xi3, g, xi1);
    worst = std::max(worst, norm_inf(lhs - rhs));
  }
  return worst;
}

/// Products of an α-vertical with a β-vertical vector reduce to the two
/// translations: η•ξ = T(L_h)(ξ) + T(R_g)(η).
inline double vertical_translation_residual(const GroupoidInstance& G,
                                            std::uint64_t seed, int count) {
  Rng rng(seed);
  const int na = G.arrow_dim();
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const auto [h, g] = G.random_composable_pair(rng);
    const Mat Ka = kernel_basis(source_jacobian(G, h));
    const Mat Kb = kernel_basis(target_jacobian(G, g));
    if (Ka.cols() == 0 || Kb.cols() == 0) continue;
    const Vec eta = Ka * random_vec(rng, static_cast<int>(Ka.cols()));
    const Vec xi = Kb * random_vec(rng, static_cast<int>(Kb.cols()));
    const Vec lhs = groupoid_tangent_mul(G, h, eta, g, xi);
    const Vec rhs = groupoid_tangent_mul(G, h, Vec::Zero(na), g, xi) +
                    groupoid_tangent_mul(G, h, eta, g, Vec::Zero(na));
    worst = std::max(worst, norm_inf(lhs - rhs));
  }
  return worst;
}

struct ActIsoResiduals {
  double morphism = 0.0;   // compatibility with α, β, 1 and κ
  double roundtrip = 0.0;  // invertibility of the comparison map

  double max() const { return std::max(morphism, roundtrip); }
};

/// The groupoid isomorphism G ⋉ g* → T*G. In right-trivialized
/// coordinates it reads (g, θ) ↦ (g, θ∘Ad_{g⁻¹}).
inline ActIsoResiduals act_iso_residual(const MatrixLieGroup& G, std::uint64_t seed,
                                        int count) {
  const ActionGroupoid act(G, ActionKind::Coadjoint);
  const CotangentGroupGroupoid cot(G);
  const int n = G.dim();
  auto fwd = [&](const Vec& z) {
    Vec out(2 * n);
    out << z.head(n), G.coadjoint(G.chart(z.head(n)), z.tail(n));
    return out;
  };
  auto bwd = [&](const Vec& z) {
    Vec out(2 * n);
    out << z.head(n), G.Ad(G.chart(z.head(n))).transpose() * z.tail(n);
    return out;
  };
  ActIsoResiduals r;
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto [h, g] = act.random_composable_pair(rng);
    r.morphism = std::max(
        r.morphism, norm_inf(fwd(act.multiply(h, g)) - cot.multiply(fwd(h), fwd(g))));
    r.morphism = std::max(r.morphism, norm_inf(cot.source(fwd(g)) - act.source(g)));
    r.morphism = std::max(r.morphism, norm_inf(cot.target(fwd(g)) - act.target(g)));
    const Vec theta = act.random_base(rng);
    r.morphism = std::max(
        r.morphism, norm_inf(fwd(act.identity_arrow(theta)) - cot.identity_arrow(theta)));
    r.roundtrip = std::max(r.roundtrip, norm_inf(bwd(fwd(g)) - g));
  }
  return r;
}

struct CotangentOracleResiduals {
  double source = 0.0;
  double target = 0.0;
  double multiply = 0.0;
  double identity = 0.0;
  double inverse = 0.0;
  double well_defined = 0.0;

  double max() const {
    return std::max({source, target, multiply, identity, inverse, well_defined});
  }
};

/// Agreement between the generic cotangent lift over the one-point-base
/// group instance and the closed-form cotangent groupoid of the same
/// group. The comparison map carries (x, μ) to the chart covector
/// Φ = Q(x)ᵀ μ through the right-trivialized chart differential Q.
inline CotangentOracleResiduals cotangent_oracle_residuals(const MatrixLieGroup& G,
                                                           std::uint64_t seed, int count,
                                                           double step = kDefaultStep) {
  const auto parent = std::make_shared<GroupGroupoid>(G);
  const CotangentLiftGroupoid lift(parent, step);
  const CotangentGroupGroupoid closed(G);
  const int n = G.dim();
  auto to_lift = [&](const Vec& z) {
    Vec out(2 * n);
    out << z.head(n), G.chart_right_trivialized(z.head(n)).transpose() * z.tail(n);
    return out;
  };
  auto from_lift = [&](const Vec& z) {
    Vec out(2 * n);
    out << z.head(n),
        solve_linear(G.chart_right_trivialized(z.head(n)).transpose(), z.tail(n));
    return out;
  };
  CotangentOracleResiduals r;
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto [h, g] = closed.random_composable_pair(rng);
    r.source = std::max(r.source, norm_inf(lift.source(to_lift(g)) - closed.source(g)));
    r.target = std::max(r.target, norm_inf(lift.target(to_lift(g)) - closed.target(g)));
    r.multiply = std::max(
        r.multiply,
        norm_inf(from_lift(lift.multiply(to_lift(h), to_lift(g))) - closed.multiply(h, g)));
    const Vec mu = closed.random_base(rng);
    r.identity = std::max(
        r.identity, norm_inf(lift.identity_arrow(mu) - to_lift(closed.identity_arrow(mu))));
    r.inverse = std::max(
        r.inverse, norm_inf(from_lift(lift.invert(to_lift(g))) - closed.invert(g)));
    // two independent decompositions of each pairing direction
    Rng noise_a(subseed(seed, "wd-a" + std::to_string(k)));
    Rng noise_b(subseed(seed, "wd-b" + std::to_string(k)));
    const Vec pa = lift.multiply_seeded(to_lift(h), to_lift(g), &noise_a);
    const Vec pb = lift.multiply_seeded(to_lift(h), to_lift(g), &noise_b);
    r.well_defined = std::max(r.well_defined, norm_inf(pa - pb));
  }
  return r;
}

}  // namespace sgl

#endif  // SGL_GROUPOID_CHECKS_HPP
