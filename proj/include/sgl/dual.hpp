#ifndef SGL_DUAL_HPP
#define SGL_DUAL_HPP

#include <cmath>
#include <vector>

namespace sgl {

/// Forward-mode dual number a + b·ε with ε² = 0. Evaluating a field on
/// duals seeded with a direction yields the exact directional derivative.
struct Dual {
  double val = 0.0;
  double dot = 0.0;

  Dual() = default;
  Dual(double v) : val(v) {}  // NOLINT: implicit from constants is intended
  Dual(double v, double d) : val(v), dot(d) {}

  Dual& operator+=(const Dual& o) {
    val += o.val;
    dot += o.dot;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    val -= o.val;
    dot -= o.dot;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    dot = dot * o.val + val * o.dot;
    val *= o.val;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    dot = (dot * o.val - val * o.dot) / (o.val * o.val);
    val /= o.val;
    return *this;
  }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }
inline Dual operator-(const Dual& a) { return {-a.val, -a.dot}; }
inline Dual operator+(const Dual& a) { return a; }

inline Dual sin(const Dual& a) { return {std::sin(a.val), std::cos(a.val) * a.dot}; }
inline Dual cos(const Dual& a) { return {std::cos(a.val), -std::sin(a.val) * a.dot}; }
inline Dual exp(const Dual& a) {
  const double e = std::exp(a.val);
  return {e, e * a.dot};
}
inline Dual log(const Dual& a) { return {std::log(a.val), a.dot / a.val}; }
inline Dual sqrt(const Dual& a) {
  const double s = std::sqrt(a.val);
  return {s, a.dot / (2.0 * s)};
}

/// Integer power by repeated multiplication; keeps x^0 == 1 with zero
/// derivative even at x = 0.
inline Dual pow_int(const Dual& a, int k) {
  Dual r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}
inline double pow_int(double a, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

using DualVec = std::vector<Dual>;

}  // namespace sgl

#endif  // SGL_DUAL_HPP
