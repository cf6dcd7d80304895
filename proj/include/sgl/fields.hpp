#ifndef SGL_FIELDS_HPP
#define SGL_FIELDS_HPP

#include <cmath>
#include <functional>
#include <utility>

#include "sgl/chart.hpp"
#include "sgl/dual.hpp"

namespace sgl {

namespace detail {

template <class F>
concept DualCallable = requires(F f, const DualVec& x) {
  { f(x) } -> std::convertible_to<Dual>;
};

}  // namespace detail

/// Real-valued field on a chart. Fields built from the library's own
/// arithmetic primitives carry a dual-number evaluation path alongside the
/// plain one; black-box fields are double-only and differentiate by
/// central differences.
class ScalarField {
 public:
  /// Field from a generic callable usable on both double and dual inputs.
  template <class F>
    requires detail::DualCallable<F>
  static ScalarField smooth(Chart chart, F f) {
    ScalarField s(std::move(chart));
    s.real_ = [f](const Vec& x) { return f(x); };
    s.dual_ = [f](const DualVec& x) { return f(x); };
    return s;
  }

  /// Black-box field: plain evaluation only.
  static ScalarField numeric(Chart chart, std::function<double(const Vec&)> f) {
    ScalarField s(std::move(chart));
    s.real_ = std::move(f);
    return s;
  }

  double operator()(const Vec& x) const {
    const double y = real_(x);
    if (!std::isfinite(y))
      throw Error("ScalarField on " + chart_.label() + ": non-finite value");
    return y;
  }

  bool has_dual() const { return static_cast<bool>(dual_); }

  Dual eval_dual(const DualVec& x) const {
    if (!dual_) throw Error("ScalarField: no dual-number path for this field");
    const Dual y = dual_(x);
    if (!std::isfinite(y.val) || !std::isfinite(y.dot))
      throw Error("ScalarField on " + chart_.label() + ": non-finite dual value");
    return y;
  }

  const Chart& chart() const { return chart_; }

 private:
  explicit ScalarField(Chart chart) : chart_(std::move(chart)) {}

  Chart chart_;
  std::function<double(const Vec&)> real_;
  std::function<Dual(const DualVec&)> dual_;
};

/// Vector field in chart coordinates.
class VectorField {
 public:
  VectorField(Chart chart, std::function<Vec(const Vec&)> f)
      : chart_(std::move(chart)), eval_(std::move(f)) {}

  Vec operator()(const Vec& x) const {
    Vec y = eval_(x);
    if (!y.allFinite())
      throw Error("VectorField on " + chart_.label() + ": non-finite value");
    return y;
  }

  const Chart& chart() const { return chart_; }

 private:
  Chart chart_;
  std::function<Vec(const Vec&)> eval_;
};

/// 1-form field; values are covectors in the chart's dual coordinates.
class OneFormField {
 public:
  OneFormField(Chart chart, std::function<Covec(const Vec&)> f)
      : chart_(std::move(chart)), eval_(std::move(f)) {}

  Covec operator()(const Vec& x) const {
    Covec y = eval_(x);
    if (!y.allFinite())
      throw Error("OneFormField on " + chart_.label() + ": non-finite value");
    return y;
  }

  const Chart& chart() const { return chart_; }

 private:
  Chart chart_;
  std::function<Covec(const Vec&)> eval_;
};

}  // namespace sgl

#endif  // SGL_FIELDS_HPP
