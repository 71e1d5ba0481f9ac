#pragma once

#include <map>
#include <memory>

#include "qhaar/combinatorics.hpp"
#include "qhaar/symmetry.hpp"

namespace qhaar {

// Element of H_{n,q} in the T-basis; no zero coefficients are stored.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement one(int n);
  static HeckeElement basis(const Permutation& w);  // T_w

  int degree() const { return n_; }
  const std::map<Permutation, Scalar>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Scalar coeff(const Permutation& w) const;
  void add_term(const Permutation& w, const Scalar& c);

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const Scalar& c, const HeckeElement& a);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }

 private:
  int n_;
  std::map<Permutation, Scalar> coords_;
};

// canonical trace: coefficient of T_identity; tau(T_u T_v) = q^{l(u)} [u = v^{-1}]
Scalar tau(const HeckeElement& x);

// T_i . x for a single generator
HeckeElement left_mul_gen(int i, const HeckeElement& x);

// L_m in H_n: L_1 = 0, L_m = sum_{i=1}^{m-1} q^{-i} T_{(m-i,m)}
HeckeElement murphy(int n, int m);

HeckeElement dipper_james_idempotent(const StandardTableau& t);
HeckeElement central_idempotent(const Partition& lambda);  // F_lambda

HeckeElement symmetrizer(int n);       // x_n
HeckeElement antisymmetrizer(int n);   // y_n

// h_n : H_n -> H_{n-1}; rho(h_map(x)) = ctrace_last(rho(x), C) exactly
HeckeElement h_map(const HeckeElement& x, const Scalar& trace_c);

// Representation rho_n of H_n on V^{(x)n} induced by a symmetry; R_w cached
// for every w in S_n.
class Rep {
 public:
  Rep(const HeckeSymmetry& sym, int n);
  static const Rep& get(const HeckeSymmetry& sym, int n);  // via sym-attached cache

  int degree() const { return n_; }
  int dim() const { return dim_; }
  const SMatrix& r_w(const Permutation& w) const;
  SMatrix rho(const HeckeElement& x) const;

 private:
  int n_;
  int dim_;
  std::map<Permutation, SMatrix> rw_;
};

// Element of H_n (x) H_m in T (x) T coordinates.
using HeckeTensor = std::map<std::pair<Permutation, Permutation>, Scalar>;

HeckeTensor casimir(int n);  // sum_w q^{-l(w)} T_{w^{-1}} (x) T_w
// (T_i (x) 1) Cas = Cas (1 (x) T_i) for all generators
bool casimir_intertwines(int n);

// sum_w q^{-l(w)} T_{w^{-1}} (x) h_n(T_w) = sum_u q^{-l(u)} (L_n + tr C) T_{u^{-1}} (x) T_u,
// both abstractly (T (x) T coordinates) and through rho (x) rho
bool check_trace_expansion(const HeckeSymmetry& sym, int n);

}  // namespace qhaar
