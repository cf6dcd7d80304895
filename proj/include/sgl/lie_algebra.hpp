#ifndef SGL_LIE_ALGEBRA_HPP
#define SGL_LIE_ALGEBRA_HPP

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sgl/chart.hpp"
#include "sgl/linalg.hpp"

namespace sgl {

/// Finite-dimensional Lie algebra given by structure constants over a
/// named basis: [e_i, e_j] = Σ_k c^k_ij e_k. Vectors and covectors are
/// plain coordinate arrays in the basis resp. dual basis.
class LieAlgebra {
 public:
  /// Constants are passed as one n×n matrix per output index k, entry
  /// (i, j) holding c^k_ij. Antisymmetry in (i, j) must be exact.
  LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Mat> c)
      : name_(std::move(name)), labels_(std::move(labels)), c_(std::move(c)) {
    const int n = dim();
    if (static_cast<int>(labels_.size()) != n)
      throw Error("LieAlgebra " + name_ + ": label count mismatch");
    for (const Mat& ck : c_) {
      if (ck.rows() != n || ck.cols() != n)
        throw Error("LieAlgebra " + name_ + ": constants shape mismatch");
      if ((ck + ck.transpose()).cwiseAbs().maxCoeff() != 0.0)
        throw Error("LieAlgebra " + name_ + ": constants not antisymmetric");
    }
  }

  /// Build from (i, j, k, value) entries meaning c^k_ij = value; the
  /// antisymmetric completion c^k_ji = -value is applied here. Indices
  /// are 0-based.
  static LieAlgebra from_triples(std::string name, int n,
                                 const std::vector<std::tuple<int, int, int, double>>& entries,
                                 std::vector<std::string> labels = {}) {
    if (labels.empty())
      for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<Mat> c(n, Mat::Zero(n, n));
    for (const auto& [i, j, k, v] : entries) {
      if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
        throw Error("LieAlgebra " + name + ": index out of range");
      c[k](i, j) = v;
      c[k](j, i) = -v;
    }
    return LieAlgebra(std::move(name), std::move(labels), std::move(c));
  }

  static LieAlgebra abelian(int n, std::string name = "") {
    if (name.empty()) name = "r" + std::to_string(n);
    return from_triples(std::move(name), n, {});
  }

  /// so(3): [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
  static LieAlgebra so3() {
    return from_triples("so3", 3, {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {2, 0, 1, 1.0}});
  }

  /// sl(2,R) in the (h, e, f) basis: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  static LieAlgebra sl2() {
    return from_triples("sl2", 3, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}},
                        {"h", "e", "f"});
  }

  /// Heisenberg h3: [x,y] = z, z central.
  static LieAlgebra heisenberg3() {
    return from_triples("heis3", 3, {{0, 1, 2, 1.0}}, {"x", "y", "z"});
  }

  int dim() const { return static_cast<int>(c_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double c(int k, int i, int j) const { return c_[k](i, j); }
  const Mat& c_matrix(int k) const { return c_[k]; }

  Vec bracket(const Vec& X, const Vec& Y) const {
    check_dim(X);
    check_dim(Y);
    Vec out(dim());
    for (int k = 0; k < dim(); ++k) out[k] = X.dot(c_[k] * Y);
    return out;
  }

  /// Matrix of ad_X in basis coordinates: ad(X)·Y = [X, Y].
  Mat ad(const Vec& X) const {
    check_dim(X);
    const int n = dim();
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.row(k) = X.transpose() * c_[k];
    return m;
  }

  /// Infinitesimal coadjoint action, ⟨ad*_X φ, Y⟩ = −⟨φ, [X, Y]⟩.
  Covec coadjoint_inf(const Vec& X, const Covec& phi) const {
    check_dim(X);
    check_dim(phi);
    return -ad(X).transpose() * phi;
  }

  /// Max over basis triples of ‖[[e_i,e_j],e_k] + cyclic‖_∞.
  double jacobi_residual() const {
    const int n = dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Vec ei = Vec::Unit(n, i), ej = Vec::Unit(n, j), ek = Vec::Unit(n, k);
          const Vec cyc = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                          bracket(bracket(ek, ei), ej);
          worst = std::max(worst, cyc.cwiseAbs().maxCoeff());
        }
    return worst;
  }

  /// Constants in the basis ẽ_a = Σ_i T_ia e_i. Covectors transform by
  /// T^{-T}; applying change_basis(T) to an algebra and its dual with the
  /// contragradient matrix preserves every pairing.
  LieAlgebra change_basis(const Mat& T, std::string new_name) const {
    const int n = dim();
    const Mat Tinv = invert(T);
    std::vector<Mat> cc(n, Mat::Zero(n, n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Vec br = bracket(T.col(a), T.col(b));
        const Vec comps = Tinv * br;
        for (int k = 0; k < n; ++k) {
          cc[k](a, b) = comps[k];
          cc[k](b, a) = -comps[k];
        }
      }
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
    return LieAlgebra(std::move(new_name), std::move(labels), std::move(cc));
  }

 private:
  void check_dim(const Vec& v) const {
    if (v.size() != dim()) throw Error("LieAlgebra " + name_ + ": dimension mismatch");
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Mat> c_;  // c_[k](i,j) = c^k_ij
};

}  // namespace sgl

#endif  // SGL_LIE_ALGEBRA_HPP
