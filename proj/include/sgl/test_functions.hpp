#ifndef SGL_TEST_FUNCTIONS_HPP
#define SGL_TEST_FUNCTIONS_HPP

#include <string>
#include <vector>

#include "sgl/calculus.hpp"
#include "sgl/chart.hpp"
#include "sgl/dual.hpp"
#include "sgl/fields.hpp"

namespace sgl {

/// Sparse multivariate polynomial. These are the stock test functions for
/// the residual suites: evaluable on duals, so their differentials are
/// available to machine precision.
class Polynomial {
 public:
  struct Term {
    double coef;
    std::vector<int> powers;  // one exponent per coordinate
  };

  Polynomial(int dim, std::vector<Term> terms)
      : dim_(dim), terms_(std::move(terms)) {}

  static Polynomial coordinate(int dim, int i) {
    std::vector<int> p(dim, 0);
    p[i] = 1;
    return Polynomial(dim, {{1.0, p}});
  }

  static Polynomial constant(int dim, double c) {
    return Polynomial(dim, {{c, std::vector<int>(dim, 0)}});
  }

  /// Random polynomial with all monomials of total degree <= degree and
  /// coefficients uniform in [-range, range].
  static Polynomial random(Rng& rng, int dim, int degree, double range = 1.0) {
    std::vector<Term> terms;
    std::vector<int> powers(dim, 0);
    build(rng, dim, degree, range, 0, degree, powers, terms);
    return Polynomial(dim, std::move(terms));
  }

  template <class X>
  auto eval(const X& x) const {
    using S = std::decay_t<decltype(x[0] * 1.0)>;
    S sum = S(0.0);
    for (const auto& t : terms_) {
      S m = S(t.coef);
      for (int i = 0; i < dim_; ++i)
        if (t.powers[i] > 0) m = m * pow_int(S(x[i]), t.powers[i]);
      sum = sum + m;
    }
    return sum;
  }

  double operator()(const Vec& x) const { return eval(x); }

  int dim() const { return dim_; }

  ScalarField field(const Chart& chart) const {
    Polynomial p = *this;
    return ScalarField::smooth(chart, [p](const auto& x) { return p.eval(x); });
  }

  /// Exact gradient through the dual path.
  Covec grad(const Vec& x) const {
    Covec g(dim_);
    for (int i = 0; i < dim_; ++i) {
      DualVec xd(static_cast<size_t>(dim_));
      for (int j = 0; j < dim_; ++j) xd[j] = Dual(x[j], i == j ? 1.0 : 0.0);
      g[i] = eval(xd).dot;
    }
    return g;
  }

  /// The exact differential as a 1-form field.
  OneFormField differential(const Chart& chart) const {
    Polynomial p = *this;
    return OneFormField(chart, [p](const Vec& x) { return p.grad(x); });
  }

 private:
  static void build(Rng& rng, int dim, int degree, double range, int coord,
                    int budget, std::vector<int>& powers, std::vector<Term>& out) {
    if (coord == dim) {
      out.push_back({uniform(rng, -range, range), powers});
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      powers[coord] = k;
      build(rng, dim, degree, range, coord + 1, budget - k, powers, out);
    }
    powers[coord] = 0;
  }

  int dim_;
  std::vector<Term> terms_;
};

/// Coordinate functions plus seeded random quadratics and cubics; the mix
/// spans the derivative orders the bracket identities exercise.
inline std::vector<Polynomial> test_function_family(Rng& rng, int dim,
                                                    int n_random = 4,
                                                    double range = 1.0) {
  std::vector<Polynomial> fam;
  for (int i = 0; i < dim; ++i) fam.push_back(Polynomial::coordinate(dim, i));
  for (int k = 0; k < n_random; ++k)
    fam.push_back(Polynomial::random(rng, dim, k % 2 == 0 ? 2 : 3, range));
  return fam;
}

}  // namespace sgl

#endif  // SGL_TEST_FUNCTIONS_HPP
