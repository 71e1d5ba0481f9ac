#pragma once

#include <cstdint>

#include "qhaar/hecke.hpp"

namespace qhaar {

// I_n = sum_w q^{-l(w)} (P_n C^{(x)n} R_{w^{-1}}) (x) R_w, stored termwise.
struct IntegralTensor {
  int n = 0;
  struct Term {
    Scalar weight;  // q^{-l(w)}
    SMatrix a;      // P_n C^{(x)n} R_{w^{-1}}
    SMatrix b;      // R_w
  };
  std::vector<Term> terms;  // n! terms, permutations in lexicographic order
};

// P_n = sum over omega_set of p_lambda rho(F_lambda); zero matrix when empty
SMatrix p_operator(const HeckeSymmetry& sym, int n);

// rho(P_{n+1}) (rho(L_{n+1}) - [s-r]_q) = rho(P_n) (x) id_V
bool check_recursion(const HeckeSymmetry& sym, int n);

const IntegralTensor& integral_tensor(const HeckeSymmetry& sym, int n);

// Signed monomial Z_I^J T_K^L: the product of the two sign-carrying tensor
// symbols with |I| z-generators and |K| t-generators.
struct Monomial {
  MultiIndex I, J, K, L;
};

// Value of the closed integral formula; 0 when |I| != |K|, on parity imbalance, or below the
// rectangle degree.
Scalar integrate_monomial(const HeckeSymmetry& sym, const Monomial& m);

// Free superalgebra on z^i_j, t^i_j: words with exact coefficients.
struct GenSymbol {
  bool is_t = false;
  int upper = 1;
  int lower = 1;
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

using FreeWord = std::vector<GenSymbol>;

class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement one() {
    FreeElement e;
    e.add_term({}, 1);
    return e;
  }
  static FreeElement word(FreeWord w) {
    FreeElement e;
    e.add_term(std::move(w), 1);
    return e;
  }

  const std::map<FreeWord, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(FreeWord w, const Scalar& c);

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);  // concatenation
  friend FreeElement operator*(const Scalar& c, const FreeElement& a);

 private:
  std::map<FreeWord, Scalar> terms_;
};

enum class ReorderStrategy { LeftmostFirst, RightmostFirst };

// Normal order: every z before every t, by the exchange rule.
FreeElement reorder(const HeckeSymmetry& sym, const FreeElement& x,
                    ReorderStrategy strategy = ReorderStrategy::LeftmostFirst);

// reorder, then integrate termwise (raw words convert to signed monomials)
Scalar integrate_element(const HeckeSymmetry& sym, const FreeElement& x,
                         ReorderStrategy strategy = ReorderStrategy::LeftmostFirst);

// Defining relations as LHS - RHS free elements (zz, zt, tz, tt families).
enum class RelationKind { ZZ, ZT, TZ, MixedExchange, TT };
std::vector<FreeElement> relation_elements(const HeckeSymmetry& sym, RelationKind kind);
std::vector<FreeElement> all_relation_elements(const HeckeSymmetry& sym);

// invariance condition checks on I_n
bool check_condition_i(const HeckeSymmetry& sym, int n);
bool check_condition_ii(const HeckeSymmetry& sym, int n);
bool check_condition_iii(const HeckeSymmetry& sym, int n);

// integral( tr(X Z^{(x)n}) tr(Y Tbar^{(x)n}) ) with Tbar the antipode-image
// matrix; used by characters and orthogonality.
Scalar paired_trace_integral(const HeckeSymmetry& sym, const SMatrix& x, const SMatrix& y, int n);

}  // namespace qhaar
