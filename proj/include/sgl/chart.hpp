#ifndef SGL_CHART_HPP
#define SGL_CHART_HPP

#include <Eigen/Dense>

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
/// Covectors share the coordinate representation of vectors; the dual
/// pairing is the component sum ⟨φ, v⟩ = Σ φ_i v_i.
using Covec = Eigen::VectorXd;

using Rng = std::mt19937_64;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Global vector-space chart. Every manifold in the library is handled
/// through a single chart of this kind; there is no atlas machinery.
class Chart {
 public:
  Chart(int dim, std::string label) : dim_(dim), label_(std::move(label)) {
    if (dim_ < 1) throw Error("Chart '" + label_ + "': dim must be >= 1");
  }

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }

 private:
  int dim_;
  std::string label_;
};

inline double pairing(const Covec& phi, const Vec& v) { return phi.dot(v); }

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec random_vec(Rng& rng, int n, double radius = 1.0) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(rng, -radius, radius);
  return v;
}

/// Deterministic per-check sub-seed so that aggregated results do not
/// depend on the order in which checks run.
inline std::uint64_t subseed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sgl

#endif  // SGL_CHART_HPP
