#include <catch2/catch_amalgamated.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "sgl/calculus.hpp"
#include "sgl/linalg.hpp"
#include "sgl/test_functions.hpp"

using namespace sgl;

namespace {
Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}
}  // namespace

TEST_CASE("directional derivative: product rule by hand") {
  Chart c(2, "R2");
  auto f = ScalarField::smooth(c, [](const auto& x) { return x[0] * x[1]; });
  const Vec x = vec2(1, 2), v = vec2(1, 0);
  CHECK(diff_directional(f, x, v, DiffMode::DualNumber) == Catch::Approx(2.0));
  CHECK(diff_directional(f, x, v, DiffMode::CentralDifference) ==
        Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("directional derivative: constants vanish") {
  Chart c(3, "R3");
  auto f = ScalarField::smooth(c, [](const auto& x) {
    using S = std::decay_t<decltype(x[0] * 1.0)>;
    (void)x;
    return S(4.25);
  });
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const Vec x = random_vec(rng, 3), v = random_vec(rng, 3);
    CHECK(diff_directional(f, x, v, DiffMode::DualNumber) == 0.0);
    CHECK(std::abs(diff_directional(f, x, v)) < 1e-10);
  }
}

TEST_CASE("central and dual modes agree on sin") {
  Chart c(1, "R");
  auto f = ScalarField::smooth(c, [](const auto& x) { return sin(x[0]); });
  Vec x(1), v(1);
  x << 0.0;
  v << 1.0;
  const double central = diff_directional(f, x, v, DiffMode::CentralDifference);
  const double dual = diff_directional(f, x, v, DiffMode::DualNumber);
  CHECK(std::abs(central - 1.0) < 1e-8);
  CHECK(dual == Catch::Approx(1.0));
  CHECK(std::abs(central - dual) < 1e-8);
}

TEST_CASE("modes agree on random polynomials") {
  Rng rng(21);
  Chart c(3, "R3");
  for (int k = 0; k < 12; ++k) {
    const auto p = Polynomial::random(rng, 3, 3);
    const auto f = p.field(c);
    const Vec x = random_vec(rng, 3), v = random_vec(rng, 3);
    const double a = diff_directional(f, x, v, DiffMode::CentralDifference);
    const double b = diff_directional(f, x, v, DiffMode::DualNumber);
    CHECK(std::abs(a - b) < 1e-6);
  }
}

TEST_CASE("halving the step reduces central-difference error ~4x") {
  Chart c(1, "R");
  auto f = ScalarField::smooth(c, [](const auto& x) { return pow_int(x[0], 5); });
  Vec x(1), v(1);
  x << 0.9;
  v << 1.0;
  const double exact = 5.0 * std::pow(0.9, 4);
  const double e1 =
      std::abs(diff_directional(f, x, v, DiffMode::CentralDifference, {1e-2}) - exact);
  const double e2 =
      std::abs(diff_directional(f, x, v, DiffMode::CentralDifference, {5e-3}) - exact);
  CHECK(e1 / e2 == Catch::Approx(4.0).epsilon(0.25));
}

TEST_CASE("curve velocity on polynomials and matrix exponentials") {
  auto gamma = [](double t) { return vec2(t, t * t); };
  CHECK((curve_velocity(gamma, 0.0) - vec2(1, 0)).norm() < 1e-9);

  auto constant = [](double) { return vec2(3, -1); };
  CHECK(curve_velocity(constant, 0.3).norm() == 0.0);

  Mat A(3, 3);
  A << 0, 1, 2, -1, 0, 0.5, -2, -0.5, 0;
  Vec x0(3);
  x0 << 1, -2, 0.5;
  auto flow = [&](double t) { return Vec((t * A).exp() * x0); };
  CHECK((curve_velocity(flow, 0.0) - A * x0).norm() < 1e-7);
}

TEST_CASE("exterior derivative of p dq") {
  Chart c(2, "QP");
  OneFormField lambda(c, [](const Vec& z) { return vec2(z[1], 0); });
  const Vec q = vec2(1, 0), p = vec2(0, 1);
  Rng rng(3);
  const Vec x = random_vec(rng, 2);
  CHECK(exterior_d1(lambda, x, q, p) == Catch::Approx(-1.0).margin(1e-9));
  CHECK(exterior_d1(lambda, x, p, q) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("exterior derivative of an exact form vanishes") {
  Rng rng(5);
  Chart c(3, "R3");
  const auto f = Polynomial::random(rng, 3, 3);
  const OneFormField df = f.differential(c);
  for (int k = 0; k < 100; ++k) {
    const Vec x = random_vec(rng, 3), v = random_vec(rng, 3), w = random_vec(rng, 3);
    CHECK(std::abs(exterior_d1(df, x, v, w)) < 1e-6);
  }
}

TEST_CASE("exterior_d1 is antisymmetric and bilinear") {
  Rng rng(11);
  Chart c(3, "R3");
  const auto p0 = Polynomial::random(rng, 3, 2);
  const auto p1 = Polynomial::random(rng, 3, 2);
  const auto p2 = Polynomial::random(rng, 3, 2);
  OneFormField lam(c, [&](const Vec& x) {
    Vec y(3);
    y << p0(x), p1(x), p2(x);
    return y;
  });
  for (int k = 0; k < 20; ++k) {
    const Vec x = random_vec(rng, 3), v = random_vec(rng, 3), w = random_vec(rng, 3);
    const Vec u = random_vec(rng, 3);
    const double a = uniform(rng, -2, 2);
    CHECK(exterior_d1(lam, x, v, w) == -exterior_d1(lam, x, w, v));
    CHECK(std::abs(exterior_d1(lam, x, v, a * w + u) - a * exterior_d1(lam, x, v, w) -
                   exterior_d1(lam, x, v, u)) < 1e-10);
  }
}

TEST_CASE("Lie derivative of a 1-form: coordinate cases") {
  Chart c(2, "R2");
  VectorField Xc(c, [](const Vec&) { return vec2(0.7, -0.2); });
  OneFormField psic(c, [](const Vec&) { return vec2(1, 2); });
  Rng rng(13);
  const Vec x = random_vec(rng, 2);
  CHECK(lie_derivative_oneform(Xc, psic, x).norm() < 1e-10);

  VectorField d1(c, [](const Vec&) { return vec2(1, 0); });
  OneFormField x1dx2(c, [](const Vec& z) { return vec2(0, z[0]); });
  const Covec lx = lie_derivative_oneform(d1, x1dx2, x);
  CHECK((lx - vec2(0, 1)).norm() < 1e-9);
}

TEST_CASE("L_X(df) = d(Xf) on random polynomials") {
  Rng rng(17);
  Chart c(3, "R3");
  for (int rep = 0; rep < 5; ++rep) {
    const auto f = Polynomial::random(rng, 3, 3);
    std::vector<Polynomial> xc;
    for (int i = 0; i < 3; ++i) xc.push_back(Polynomial::random(rng, 3, 2));
    VectorField X(c, [&](const Vec& y) {
      Vec v(3);
      for (int i = 0; i < 3; ++i) v[i] = xc[i](y);
      return v;
    });
    const OneFormField df = f.differential(c);
    // Xf through the exact gradients, then d(Xf) by a coarser outer step.
    auto xf = ScalarField::numeric(c, [&](const Vec& y) { return X(y).dot(f.grad(y)); });
    Rng rng2(rng());
    const Vec x = random_vec(rng2, 3, 0.8);
    const Covec lhs = lie_derivative_oneform(X, df, x);
    Covec rhs(3);
    for (int i = 0; i < 3; ++i)
      rhs[i] = diff_directional(xf, x, Vec::Unit(3, i), DiffMode::CentralDifference,
                                {kNestedStep});
    CHECK((lhs - rhs).norm() < 1e-6);
  }
}

TEST_CASE("linear solve flags singular systems") {
  Mat A(2, 2);
  A << 1, 2, 2, 4;
  Vec b = vec2(1, 1);
  CHECK_THROWS_AS(solve_linear(A, b), SingularMatrix);
  A << 3, 1, -1, 2;
  const Vec x = solve_linear(A, b);
  CHECK((A * x - b).norm() < 1e-12);
}

TEST_CASE("kernel basis of a full-rank and an empty map") {
  Mat A(1, 3);
  A << 1, 1, 1;
  const Mat K = kernel_basis(A);
  REQUIRE(K.cols() == 2);
  CHECK((A * K).norm() < 1e-12);
  CHECK((K.transpose() * K - Mat::Identity(2, 2)).norm() < 1e-12);

  const Mat full = kernel_basis(Mat::Zero(0, 4));
  CHECK(full.cols() == 4);
}
