#ifndef SGL_CALCULUS_HPP
#define SGL_CALCULUS_HPP

#include <cmath>
#include <functional>

#include "sgl/chart.hpp"
#include "sgl/dual.hpp"
#include "sgl/fields.hpp"

namespace sgl {

/// Default central-difference step; inputs are kept at O(1) scale
/// throughout, which balances truncation against rounding for doubles.
inline constexpr double kDefaultStep = 1e-5;

/// Step for differentiating quantities that are themselves produced by a
/// finite-difference pass. The coarser step keeps the inner noise floor
/// from being amplified.
inline constexpr double kNestedStep = 1e-4;

struct FdOpts {
  double step = kDefaultStep;
};

enum class DiffMode { CentralDifference, DualNumber };

/// Directional derivative ⟨df(x), v⟩.
inline double diff_directional(const ScalarField& f, const Vec& x, const Vec& v,
                               DiffMode mode = DiffMode::CentralDifference,
                               const FdOpts& opts = {}) {
  if (mode == DiffMode::DualNumber) {
    DualVec xd(static_cast<size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) xd[i] = Dual(x[i], v[i]);
    return f.eval_dual(xd).dot;
  }
  const double h = opts.step;
  const double y = (f(x + h * v) - f(x - h * v)) / (2.0 * h);
  if (!std::isfinite(y)) throw Error("diff_directional: non-finite result");
  return y;
}

/// Gradient of a scalar field; exact through the dual path when the field
/// carries one, otherwise coordinatewise central differences.
inline Covec gradient(const ScalarField& f, const Vec& x, const FdOpts& opts = {}) {
  const int n = static_cast<int>(x.size());
  Covec g(n);
  const DiffMode mode =
      f.has_dual() ? DiffMode::DualNumber : DiffMode::CentralDifference;
  for (int i = 0; i < n; ++i)
    g[i] = diff_directional(f, x, Vec::Unit(n, i), mode, opts);
  return g;
}

/// Componentwise derivative of a curve at t0. Works for vector- and
/// matrix-valued curves alike.
template <class F>
auto curve_velocity(F&& curve, double t0, double step = kDefaultStep) {
  auto v = ((curve(t0 + step) - curve(t0 - step)) / (2.0 * step)).eval();
  if (!v.allFinite()) throw Error("curve_velocity: non-finite result");
  return v;
}

/// Directional derivative of a chart map F along v, i.e. T(F)(x, v).
inline Vec push_forward(const std::function<Vec(const Vec&)>& map, const Vec& x,
                        const Vec& v, double step = kDefaultStep) {
  Vec y = (map(x + step * v) - map(x - step * v)) / (2.0 * step);
  if (!y.allFinite()) throw Error("push_forward: non-finite result");
  return y;
}

/// Jacobian of a chart map by central differences, one column per
/// coordinate direction.
inline Mat jacobian(const std::function<Vec(const Vec&)>& map, const Vec& x,
                    double step = kDefaultStep) {
  const int n = static_cast<int>(x.size());
  const Vec y0 = map(x);
  Mat jac(y0.size(), n);
  for (int j = 0; j < n; ++j)
    jac.col(j) = push_forward(map, x, Vec::Unit(n, j), step);
  return jac;
}

/// dλ(v, w)(x) for constant chart vectors v, w: since constant vector
/// fields commute in a chart, dλ(v,w) = D_v⟨λ, w⟩ − D_w⟨λ, v⟩.
inline double exterior_d1(const OneFormField& lambda, const Vec& x, const Vec& v,
                          const Vec& w, const FdOpts& opts = {}) {
  const double h = opts.step;
  const double dv = (lambda(x + h * v).dot(w) - lambda(x - h * v).dot(w)) / (2.0 * h);
  const double dw = (lambda(x + h * w).dot(v) - lambda(x - h * w).dot(v)) / (2.0 * h);
  return dv - dw;
}

/// Lie derivative of a 1-form along a vector field:
/// (L_X ψ)_i = X^j ∂_j ψ_i + ψ_j ∂_i X^j.
inline Covec lie_derivative_oneform(const VectorField& X, const OneFormField& psi,
                                    const Vec& x, const FdOpts& opts = {}) {
  const Mat jpsi = jacobian([&](const Vec& y) { return Vec(psi(y)); }, x, opts.step);
  const Mat jx = jacobian([&](const Vec& y) { return X(y); }, x, opts.step);
  return jpsi * X(x) + jx.transpose() * psi(x);
}

}  // namespace sgl

#endif  // SGL_CALCULUS_HPP
