#ifndef SGL_MULTIVECTOR_HPP
#define SGL_MULTIVECTOR_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sgl/lie_algebra.hpp"

namespace sgl {

namespace detail {

/// Strictly increasing index tuples of length k out of {0..n-1}, in
/// lexicographic order; this fixes the component ordering of multivectors.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Sort indices, returning the permutation sign, or 0 on a repeat.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

}  // namespace detail

/// Element of ⋀^k g for k ≤ 3, stored on the basis e_{i1}∧…∧e_{ik} with
/// i1 < … < ik in lexicographic order.
class Multivector {
 public:
  static constexpr int kMaxDegree = 3;

  Multivector(int n, int degree) : n_(n), degree_(degree) {
    if (degree < 0 || degree > kMaxDegree)
      throw Error("Multivector: degree out of range");
    index_ = detail::combinations(n, degree);
    comps_ = Vec::Zero(static_cast<int>(index_.size()));
  }

  static Multivector scalar(int n, double v) {
    Multivector m(n, 0);
    m.comps_[0] = v;
    return m;
  }

  static Multivector vector(const Vec& x) {
    Multivector m(static_cast<int>(x.size()), 1);
    m.comps_ = x;
    return m;
  }

  static Multivector basis(int n, std::vector<int> idx) {
    Multivector m(n, static_cast<int>(idx.size()));
    const int sign = detail::sort_sign(idx);
    if (sign != 0) m.comps_[m.position(idx)] = sign;
    return m;
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const Vec& components() const { return comps_; }
  Vec& components() { return comps_; }
  const std::vector<std::vector<int>>& index_tuples() const { return index_; }

  /// Coefficient of an arbitrary (possibly unsorted) index tuple, with the
  /// permutation sign applied.
  double coef(std::vector<int> idx) const {
    const int sign = detail::sort_sign(idx);
    if (sign == 0) return 0.0;
    return sign * comps_[position(idx)];
  }

  void add_term(std::vector<int> idx, double v) {
    const int sign = detail::sort_sign(idx);
    if (sign == 0) return;
    comps_[position(idx)] += sign * v;
  }

  Multivector operator+(const Multivector& o) const {
    compat(o);
    Multivector r = *this;
    r.comps_ += o.comps_;
    return r;
  }
  Multivector operator-(const Multivector& o) const {
    compat(o);
    Multivector r = *this;
    r.comps_ -= o.comps_;
    return r;
  }
  Multivector operator*(double a) const {
    Multivector r = *this;
    r.comps_ *= a;
    return r;
  }
  Multivector operator-() const { return *this * -1.0; }

  Multivector wedge(const Multivector& o) const {
    if (n_ != o.n_) throw Error("Multivector: wedge dimension mismatch");
    const int d = degree_ + o.degree_;
    if (d > kMaxDegree) throw Error("Multivector: wedge degree beyond cap");
    Multivector r(n_, d);
    for (size_t a = 0; a < index_.size(); ++a) {
      if (comps_[static_cast<int>(a)] == 0.0) continue;
      for (size_t b = 0; b < o.index_.size(); ++b) {
        if (o.comps_[static_cast<int>(b)] == 0.0) continue;
        std::vector<int> idx = index_[a];
        idx.insert(idx.end(), o.index_[b].begin(), o.index_[b].end());
        r.add_term(std::move(idx),
                   comps_[static_cast<int>(a)] * o.comps_[static_cast<int>(b)]);
      }
    }
    return r;
  }

  double norm_inf() const {
    return comps_.size() == 0 ? 0.0 : comps_.cwiseAbs().maxCoeff();
  }

 private:
  int position(const std::vector<int>& sorted) const {
    const auto it = std::lower_bound(index_.begin(), index_.end(), sorted);
    if (it == index_.end() || *it != sorted)
      throw Error("Multivector: bad index tuple");
    return static_cast<int>(it - index_.begin());
  }

  void compat(const Multivector& o) const {
    if (n_ != o.n_ || degree_ != o.degree_)
      throw Error("Multivector: shape mismatch");
  }

  int n_;
  int degree_;
  std::vector<std::vector<int>> index_;
  Vec comps_;
};

inline Multivector operator*(double a, const Multivector& m) { return m * a; }

/// A Lie algebra together with a Lie structure on its dual, the candidate
/// data of a Lie bialgebra. gstar's constants live in the dual basis.
struct LieBialgebra {
  LieAlgebra g;
  LieAlgebra gstar;

  LieBialgebra(LieAlgebra g_, LieAlgebra gstar_)
      : g(std::move(g_)), gstar(std::move(gstar_)) {
    if (g.dim() != gstar.dim()) throw Error("LieBialgebra: dimension mismatch");
  }
};

/// Coboundary operator of gstar acting on ⋀^k g, fixed on degree 1 by
/// ⟨d_*X, ε^i∧ε^j⟩ = −⟨X, [ε^i, ε^j]_*⟩ and extended to higher degree as
/// a derivation of the wedge. Degree 0 maps to zero (point base).
inline Multivector ce_differential(const LieBialgebra& b, const Multivector& P) {
  const int n = b.g.dim();
  if (P.n() != n) throw Error("ce_differential: dimension mismatch");
  switch (P.degree()) {
    case 0:
      return Multivector(n, 1);
    case 1: {
      Multivector out(n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double v = 0.0;
          for (int k = 0; k < n; ++k) v -= b.gstar.c(k, i, j) * P.components()[k];
          out.add_term({i, j}, v);
        }
      return out;
    }
    case 2: {
      Multivector out(n, 3);
      for (size_t t = 0; t < P.index_tuples().size(); ++t) {
        const double p = P.components()[static_cast<int>(t)];
        if (p == 0.0) continue;
        const int a = P.index_tuples()[t][0], c = P.index_tuples()[t][1];
        const Multivector da =
            ce_differential(b, Multivector::vector(Vec::Unit(n, a)));
        const Multivector dc =
            ce_differential(b, Multivector::vector(Vec::Unit(n, c)));
        const Multivector ea = Multivector::vector(Vec::Unit(n, a));
        const Multivector ec = Multivector::vector(Vec::Unit(n, c));
        const Multivector contrib = da.wedge(ec) - ea.wedge(dc);
        for (int q = 0; q < contrib.components().size(); ++q)
          out.components()[q] += p * contrib.components()[q];
      }
      return out;
    }
    default:
      throw Error("ce_differential: unsupported degree");
  }
}

/// Schouten bracket in the degrees the compatibility equation needs:
/// (1,1) is the Lie bracket, (1,2) extends it as a derivation of ∧, and
/// (2,1) is fixed by [P, X] = −[X, P].
inline Multivector schouten(const LieAlgebra& g, const Multivector& P,
                            const Multivector& Q) {
  const int n = g.dim();
  if (P.n() != n || Q.n() != n) throw Error("schouten: dimension mismatch");
  if (P.degree() == 1 && Q.degree() == 1)
    return Multivector::vector(g.bracket(P.components(), Q.components()));
  if (P.degree() == 1 && Q.degree() == 2) {
    Multivector out(n, 2);
    for (size_t t = 0; t < Q.index_tuples().size(); ++t) {
      const double q = Q.components()[static_cast<int>(t)];
      if (q == 0.0) continue;
      const int a = Q.index_tuples()[t][0], b = Q.index_tuples()[t][1];
      const Vec xa = g.bracket(P.components(), Vec::Unit(n, a));
      const Vec xb = g.bracket(P.components(), Vec::Unit(n, b));
      const Multivector term =
          Multivector::vector(xa).wedge(Multivector::basis(n, {b})) +
          Multivector::basis(n, {a}).wedge(Multivector::vector(xb));
      for (int c = 0; c < term.components().size(); ++c)
        out.components()[c] += q * term.components()[c];
    }
    return out;
  }
  if (P.degree() == 2 && Q.degree() == 1) return -schouten(g, Q, P);
  throw Error("schouten: unsupported degree pair");
}

/// Defect of d_*[X,Y] = [X, d_*Y] + [d_*X, Y] over the basis of g.
inline double bialgebra_residual(const LieBialgebra& b) {
  const int n = b.g.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Multivector ei = Multivector::vector(Vec::Unit(n, i));
      const Multivector ej = Multivector::vector(Vec::Unit(n, j));
      const Multivector lhs =
          ce_differential(b, Multivector::vector(b.g.bracket(ei.components(),
                                                             ej.components())));
      const Multivector rhs = schouten(b.g, ei, ce_differential(b, ej)) +
                              schouten(b.g, ce_differential(b, ei), ej);
      worst = std::max(worst, (lhs - rhs).norm_inf());
    }
  return worst;
}

/// Cobracket of a coboundary bialgebra: δ(X) = [X, r] for r ∈ ⋀²g.
inline Multivector coboundary_cobracket(const LieAlgebra& g, const Multivector& r,
                                        const Vec& X) {
  return schouten(g, Multivector::vector(X), r);
}

/// Read off the dual algebra structure constants from a cobracket:
/// [ε^i, ε^j]_* = Σ_k ⟨ε^i∧ε^j, δ(e_k)⟩ ε^k.
inline LieAlgebra dual_from_cobracket(const LieAlgebra& g, const Multivector& r,
                                      const std::string& name) {
  const int n = g.dim();
  std::vector<std::tuple<int, int, int, double>> entries;
  for (int k = 0; k < n; ++k) {
    const Multivector dk = coboundary_cobracket(g, r, Vec::Unit(n, k));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = dk.coef({i, j});
        if (v != 0.0) entries.emplace_back(i, j, k, v);
      }
  }
  return LieAlgebra::from_triples(name, n, entries);
}

/// Classical double of a compatible pair: the bracket on g ⊕ g* restricts
/// to the inputs on each summand, with the mixed part
/// [X, φ] = ad*_X φ − ad*_φ X. Rejects incompatible inputs.
inline LieAlgebra drinfeld_double(const LieBialgebra& b, double tol = 1e-9) {
  const double res = bialgebra_residual(b);
  if (res > tol)
    throw Error("drinfeld_double: compatibility residual " + std::to_string(res) +
                " exceeds tolerance");
  const int n = b.g.dim();
  std::vector<std::tuple<int, int, int, double>> entries;
  auto emit = [&](int i, int j, const Vec& gpart, const Vec& spart) {
    for (int k = 0; k < n; ++k) {
      if (gpart[k] != 0.0) entries.emplace_back(i, j, k, gpart[k]);
      if (spart[k] != 0.0) entries.emplace_back(i, j, n + k, spart[k]);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      emit(i, j, b.g.bracket(Vec::Unit(n, i), Vec::Unit(n, j)), Vec::Zero(n));
      emit(n + i, n + j, Vec::Zero(n),
           b.gstar.bracket(Vec::Unit(n, i), Vec::Unit(n, j)));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // [e_i, ε^j]: g-part −ad*_{ε^j} e_i, g*-part ad*_{e_i} ε^j.
      const Vec gpart = -b.gstar.coadjoint_inf(Vec::Unit(n, j), Vec::Unit(n, i));
      const Vec spart = b.g.coadjoint_inf(Vec::Unit(n, i), Vec::Unit(n, j));
      emit(i, n + j, gpart, spart);
    }
  std::vector<std::string> labels = b.g.labels();
  for (const auto& l : b.gstar.labels()) labels.push_back(l + "*");
  return LieAlgebra::from_triples("double(" + b.g.name() + "," + b.gstar.name() + ")",
                                  2 * n, entries, std::move(labels));
}

/// Canonical symmetric pairing on g ⊕ g*: ⟨⟨X+φ, Y+ψ⟩⟩ = ⟨φ,Y⟩ + ⟨ψ,X⟩.
inline double double_pairing(const Vec& a, const Vec& bvec) {
  const int n = static_cast<int>(a.size()) / 2;
  return a.tail(n).dot(bvec.head(n)) + bvec.tail(n).dot(a.head(n));
}

}  // namespace sgl

#endif  // SGL_MULTIVECTOR_HPP
