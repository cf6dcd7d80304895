#ifndef SGL_POISSON_HPP
#define SGL_POISSON_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sgl/calculus.hpp"
#include "sgl/chart.hpp"
#include "sgl/fields.hpp"
#include "sgl/lie_algebra.hpp"
#include "sgl/linalg.hpp"

namespace sgl {

/// Poisson structure on a global chart: an antisymmetric bivector-valued
/// function π(x). The anchor sign is fixed once and for all by the pairing
/// ⟨φ, π#ψ⟩ = π(ψ, φ); no other convention is used anywhere downstream.
class PoissonStructure {
 public:
  PoissonStructure(Chart chart, std::function<Mat(const Vec&)> pi)
      : chart_(std::move(chart)), pi_(std::move(pi)) {}

  static PoissonStructure zero(Chart chart) {
    const int n = chart.dim();
    return {std::move(chart), [n](const Vec&) { return Mat::Zero(n, n); }};
  }

  static PoissonStructure constant(Chart chart, Mat pi0) {
    if ((pi0 + pi0.transpose()).cwiseAbs().maxCoeff() != 0.0)
      throw Error("PoissonStructure: constant bivector not antisymmetric");
    return {std::move(chart), [pi0](const Vec&) { return pi0; }};
  }

  /// Standard symplectic bivector on R^{2m} in (q_1..q_m, p_1..p_m)
  /// coordinates: {q_i, p_i} = 1.
  static PoissonStructure standard_symplectic(int n) {
    if (n % 2 != 0) throw Error("standard_symplectic: chart dimension must be even");
    const int m = n / 2;
    Mat pi0 = Mat::Zero(n, n);
    pi0.topRightCorner(m, m) = Mat::Identity(m, m);
    pi0.bottomLeftCorner(m, m) = -Mat::Identity(m, m);
    return constant(Chart(n, "R" + std::to_string(n) + "-symplectic"), pi0);
  }

  /// Lie–Poisson structure on the dual of a Lie algebra:
  /// π^{ij}(φ) = Σ_k c^k_ij φ_k, so that {ℓ_X, ℓ_Y} = ℓ_{[X,Y]}.
  static PoissonStructure lie_poisson(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<Mat> c;
    for (int k = 0; k < n; ++k) c.push_back(g.c_matrix(k));
    return {Chart(n, g.name() + "-dual"), [c, n](const Vec& phi) {
              Mat pi = Mat::Zero(n, n);
              for (int k = 0; k < n; ++k) pi += phi[k] * c[k];
              return pi;
            }};
  }

  const Chart& chart() const { return chart_; }

  Mat bivector(const Vec& x) const {
    Mat p = pi_(x);
    if (!p.allFinite())
      throw Error("PoissonStructure on " + chart_.label() + ": non-finite bivector");
    return p;
  }

  /// π# as a matrix acting on covector coordinates: (π#ψ)^j = Σ_i π^{ij} ψ_i.
  Mat anchor_matrix(const Vec& x) const { return bivector(x).transpose(); }

 private:
  Chart chart_;
  std::function<Mat(const Vec&)> pi_;
};

/// {f, g}(x) = Σ_ij π^{ij} ∂_i f ∂_j g.
inline double bracket_fn(const PoissonStructure& pi, const ScalarField& f,
                         const ScalarField& g, const Vec& x, const FdOpts& opts = {}) {
  const Covec df = gradient(f, x, opts);
  const Covec dg = gradient(g, x, opts);
  return df.dot(pi.bivector(x) * dg);
}

/// π#ψ at x, fixed by ⟨φ, π#ψ⟩ = π(ψ, φ) for all φ.
inline Vec anchor(const PoissonStructure& pi, const Covec& psi, const Vec& x) {
  return pi.anchor_matrix(x) * psi;
}

/// Max over samples and coordinate triples of |{x_i,{x_j,x_k}} + cyclic|.
inline double jacobi_residual_pts(const PoissonStructure& pi,
                                  const std::vector<Vec>& points,
                                  const FdOpts& opts = {}) {
  const int n = pi.chart().dim();
  double worst = 0.0;
  auto entry = [&](int j, int k) {
    return ScalarField::numeric(pi.chart(),
                                [&pi, j, k](const Vec& y) { return pi.bivector(y)(j, k); });
  };
  for (const Vec& x : points)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const auto fi = ScalarField::numeric(
              pi.chart(), [i](const Vec& y) { return y[i]; });
          const auto fj = ScalarField::numeric(
              pi.chart(), [j](const Vec& y) { return y[j]; });
          const auto fk = ScalarField::numeric(
              pi.chart(), [k](const Vec& y) { return y[k]; });
          const double cyc = bracket_fn(pi, fi, entry(j, k), x, opts) +
                             bracket_fn(pi, fj, entry(k, i), x, opts) +
                             bracket_fn(pi, fk, entry(i, j), x, opts);
          worst = std::max(worst, std::abs(cyc));
        }
  return worst;
}

/// π# of a 1-form field, as a vector field.
inline VectorField anchor_field(const PoissonStructure& pi, const OneFormField& phi) {
  return VectorField(pi.chart(),
                     [pi, phi](const Vec& x) { return anchor(pi, phi(x), x); });
}

/// Bracket of 1-forms [φ,ψ] = L_{π#φ}ψ − L_{π#ψ}φ − d(π(φ,ψ)), evaluated
/// at a point.
inline Covec oneform_bracket(const PoissonStructure& pi, const OneFormField& phi,
                             const OneFormField& psi, const Vec& x,
                             const FdOpts& opts = {}) {
  const VectorField phis = anchor_field(pi, phi);
  const VectorField psis = anchor_field(pi, psi);
  const Covec t1 = lie_derivative_oneform(phis, psi, x, opts);
  const Covec t2 = lie_derivative_oneform(psis, phi, x, opts);
  // π(φ,ψ) = ⟨ψ, π#φ⟩
  auto pf = ScalarField::numeric(
      pi.chart(), [pi, phi, psi](const Vec& y) { return psi(y).dot(anchor(pi, phi(y), y)); });
  const int n = pi.chart().dim();
  Covec t3(n);
  for (int i = 0; i < n; ++i)
    t3[i] = diff_directional(pf, x, Vec::Unit(n, i), DiffMode::CentralDifference, opts);
  return t1 - t2 - t3;
}

inline OneFormField oneform_bracket_field(const PoissonStructure& pi,
                                          const OneFormField& phi,
                                          const OneFormField& psi,
                                          const FdOpts& opts = {}) {
  return OneFormField(pi.chart(), [pi, phi, psi, opts](const Vec& x) {
    return oneform_bracket(pi, phi, psi, x, opts);
  });
}

struct CotangentAlgebroidResiduals {
  double anchor_morphism = 0.0;
  double leibniz = 0.0;
};

/// Lie-algebroid axioms of (T*P, [.,.], π#): the anchor sends the bracket
/// of 1-forms to the bracket of vector fields, and the bracket satisfies
/// the Leibniz rule in its second argument.
inline CotangentAlgebroidResiduals cotangent_algebroid_residuals(
    const PoissonStructure& pi, const OneFormField& phi, const OneFormField& psi,
    const ScalarField& f, const std::vector<Vec>& samples, const FdOpts& opts = {}) {
  CotangentAlgebroidResiduals out;
  const VectorField U = anchor_field(pi, phi);
  const VectorField V = anchor_field(pi, psi);
  // brackets of the produced fields get a coarser outer step
  const FdOpts outer{kNestedStep};
  for (const Vec& x : samples) {
    // (a) π#[φ,ψ] − [π#φ, π#ψ]
    const Vec lhs = anchor(pi, oneform_bracket(pi, phi, psi, x, opts), x);
    const Mat ju = jacobian([&](const Vec& y) { return U(y); }, x, outer.step);
    const Mat jv = jacobian([&](const Vec& y) { return V(y); }, x, outer.step);
    const Vec rhs = jv * U(x) - ju * V(x);
    out.anchor_morphism = std::max(out.anchor_morphism, (lhs - rhs).norm());

    // (b) [φ, fψ] − f[φ,ψ] − (π#φ)(f)ψ
    OneFormField fpsi(pi.chart(), [f, psi](const Vec& y) { return Covec(f(y) * psi(y)); });
    const Covec b1 = oneform_bracket(pi, phi, fpsi, x, opts);
    const Covec b2 = f(x) * oneform_bracket(pi, phi, psi, x, opts);
    const double uf = gradient(f, x, opts).dot(U(x));
    out.leibniz = std::max(out.leibniz, (b1 - b2 - uf * psi(x)).norm());
  }
  return out;
}

/// Tangent-lift Poisson structure on TP in coordinates (x, v): the block
/// candidate [[0, π(x)], [π(x), Dπ(x)[v]]], fixed by the three lifted
/// bracket identities, which the suites verify against this candidate.
inline PoissonStructure tangent_lift(const PoissonStructure& base,
                                     const FdOpts& opts = {}) {
  const int n = base.chart().dim();
  Chart lifted(2 * n, base.chart().label() + "-tangent");
  return {std::move(lifted), [base, n, opts](const Vec& z) {
            const Vec x = z.head(n), v = z.tail(n);
            const Mat p = base.bivector(x);
            const double h = opts.step;
            const Mat dp =
                (base.bivector(x + h * v) - base.bivector(x - h * v)) / (2.0 * h);
            Mat out = Mat::Zero(2 * n, 2 * n);
            out.topRightCorner(n, n) = p;
            out.bottomLeftCorner(n, n) = p;
            out.bottomRightCorner(n, n) = dp;
            return out;
          }};
}

/// ℓ_{df}: the fibrewise-linear function on TP pairing df with the fibre.
inline ScalarField lifted_differential(const PoissonStructure& lift,
                                       const ScalarField& f, const FdOpts& opts = {}) {
  const int n = lift.chart().dim() / 2;
  return ScalarField::numeric(lift.chart(), [f, n, opts](const Vec& z) {
    return gradient(f, z.head(n), opts).dot(z.tail(n));
  });
}

inline ScalarField pullback_to_tangent(const PoissonStructure& lift,
                                       const ScalarField& f) {
  const int n = lift.chart().dim() / 2;
  return ScalarField::numeric(lift.chart(),
                              [f, n](const Vec& z) { return f(z.head(n)); });
}

/// Defect of {f∘μ, g∘μ}_P = {f,g}_Q ∘ μ over sample points and test pairs.
inline double poisson_map_residual(const std::function<Vec(const Vec&)>& mu,
                                   const PoissonStructure& piP,
                                   const PoissonStructure& piQ,
                                   const std::vector<ScalarField>& fns,
                                   const std::vector<Vec>& samples,
                                   const FdOpts& opts = {}) {
  double worst = 0.0;
  for (const Vec& x : samples) {
    const Vec y = mu(x);
    for (size_t a = 0; a < fns.size(); ++a)
      for (size_t b = a + 1; b < fns.size(); ++b) {
        auto fa = ScalarField::numeric(piP.chart(),
                                       [&mu, f = fns[a]](const Vec& p) { return f(mu(p)); });
        auto fb = ScalarField::numeric(piP.chart(),
                                       [&mu, f = fns[b]](const Vec& p) { return f(mu(p)); });
        const double lhs = bracket_fn(piP, fa, fb, x, opts);
        const double rhs = bracket_fn(piQ, fns[a], fns[b], y, opts);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  }
  return worst;
}

/// Submanifold cut out by independent constraint functions.
struct Submanifold {
  Chart ambient;
  std::vector<ScalarField> constraints;

  double constraint_defect(const Vec& x) const {
    double d = 0.0;
    for (const auto& h : constraints) d = std::max(d, std::abs(h(x)));
    return d;
  }
};

/// Coisotropy defect: π# must map the annihilator of TC (spanned by the
/// constraint gradients) into TC, i.e. dh_b(π# dh_a) ≈ 0 on C.
inline double coisotropy_residual(const Submanifold& C, const PoissonStructure& pi,
                                  const std::vector<Vec>& samples_on_C,
                                  const FdOpts& opts = {}) {
  double worst = 0.0;
  for (const Vec& x : samples_on_C) {
    if (C.constraint_defect(x) > 1e-9)
      throw Error("coisotropy_residual: sample off the submanifold");
    std::vector<Covec> grads;
    grads.reserve(C.constraints.size());
    for (const auto& h : C.constraints) grads.push_back(gradient(h, x, opts));
    for (const auto& ga : grads) {
      const Vec va = anchor(pi, ga, x);
      for (const auto& gb : grads)
        worst = std::max(worst, std::abs(gb.dot(va)));
    }
  }
  return worst;
}

}  // namespace sgl

#endif  // SGL_POISSON_HPP
