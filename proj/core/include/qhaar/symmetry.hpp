#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qhaar/superlinalg.hpp"

namespace qhaar {

struct NotClosedError : std::runtime_error {
  NotClosedError() : std::runtime_error("R-matrix has no closure inverse") {}
};

struct SymmetryCache;  // lazily built per-symmetry work data (reps, integral tensors)

// A Hecke symmetry with its derived data. R acts by R(x_i (x) x_j) =
// x_k (x) x_l R^{kl}_{ij}; matrices store row = upper pair, column = lower pair.
struct HeckeSymmetry {
  int d = 1;
  ParityVector parities;
  SMatrix R;  // d^2 x d^2
  SMatrix P;  // closure: P^{im}_{jn} R^{nk}_{ml} = delta^i_l delta^k_j
  SMatrix C;  // C^i_j = P^{il}_{jl}
  SMatrix D;  // D^i_j = P^{li}_{lj}
  int birank_r = 0;
  int birank_s = 0;
  std::string name;  // "glq:r" / "glq:r|s" / "custom"
  mutable std::shared_ptr<SymmetryCache> cache;

  int pair_index(int a, int b) const { return (a - 1) * d + (b - 1); }  // 1-based args
  Scalar r_entry(int k, int l, int i, int j) const {  // R^{kl}_{ij}
    return R.at(pair_index(k, l), pair_index(i, j));
  }
  Scalar p_entry(int i, int m, int j, int n) const {  // P^{im}_{jn}
    return P.at(pair_index(i, m), pair_index(j, n));
  }
};

// P from the closure identity; throws NotClosedError if the system is singular.
SMatrix closure_inverse(const SMatrix& r_matrix, int d);
std::pair<SMatrix, SMatrix> reflection_ops(const SMatrix& p_matrix, int d);

HeckeSymmetry build_drinfeld_jimbo(int r);
HeckeSymmetry build_manin_super(int r, int s);
// from user data; computes P, C, D (throws NotClosedError)
HeckeSymmetry make_symmetry(int d, ParityVector parities, SMatrix r_matrix,
                            int birank_r, int birank_s, std::string name = "custom");

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// yang_baxter, hecke_relation, closure, evenness (R,P,C,D), trace_assumption
ValidationReport validate(const HeckeSymmetry& sym);

struct CdReport {
  bool commute = false;     // CD == DC
  bool is_scalar = false;   // CD is a multiple of the identity
  Scalar scalar;            // the multiple, when is_scalar
  Scalar candidate;         // q^{-1} - (q^{-1} - 1) tr(C)
  bool matches_candidate = false;
};

CdReport check_cd_relation(const HeckeSymmetry& sym);

// dim Lambda_n = rank rho_n(y_n) for n = 0..max_degree
std::vector<int> poincare_prefix(const HeckeSymmetry& sym, int max_degree);

}  // namespace qhaar
