#pragma once

#include <optional>
#include <vector>

#include "qhaar/scalar.hpp"

namespace qhaar {

using ParityVector = std::vector<int>;  // one bit per basis vector, length d

// Multi-index (i_1..i_n), entries 1..d, leftmost factor most significant.
using MultiIndex = std::vector<int>;

int encode(const MultiIndex& idx, int d);
MultiIndex decode(int code, int d, int n);
MultiIndex reversed(const MultiIndex& idx);
int parity_sum(const ParityVector& parities, const MultiIndex& idx);  // mod 2

// sign(i,j) = 1; sign(I.a, J.b) = (-1)^{par(a)(|I|+|J|)} sign(I,J), where the
// exponent uses the parity of the letter appended to the first sequence.
int sign_factor(const ParityVector& parities, const MultiIndex& I, const MultiIndex& J);

// Dense matrix over the exact scalar field.
class SMatrix {
 public:
  SMatrix() = default;
  SMatrix(int rows, int cols);
  static SMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  SMatrix transpose() const;
  Scalar trace() const;

  friend SMatrix operator+(const SMatrix& a, const SMatrix& b);
  friend SMatrix operator-(const SMatrix& a, const SMatrix& b);
  friend SMatrix operator*(const SMatrix& a, const SMatrix& b);
  friend SMatrix operator*(const Scalar& c, const SMatrix& a);
  SMatrix& operator+=(const SMatrix& b) { *this = *this + b; return *this; }
  friend bool operator==(const SMatrix& a, const SMatrix& b);
  friend bool operator!=(const SMatrix& a, const SMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

SMatrix kron(const SMatrix& a, const SMatrix& b);

// Operator on V^{(x)n}, dense d^n x d^n.
struct TensorOperator {
  int d = 1;
  int n = 0;
  SMatrix m;

  TensorOperator() = default;
  TensorOperator(int d_, int n_) : d(d_), n(n_), m(SMatrix(ipow(d_, n_), ipow(d_, n_))) {}
  TensorOperator(int d_, int n_, SMatrix mat) : d(d_), n(n_), m(std::move(mat)) {}
  static int ipow(int b, int e) {
    int v = 1;
    while (e-- > 0) v *= b;
    return v;
  }
  int dim() const { return ipow(d, n); }
};

// id^{(x)(i-1)} (x) R (x) id^{(x)(n-i-1)} for R on V(x)V, 1 <= i <= n-1
SMatrix embed(const SMatrix& r_matrix, int i, int n, int d);

// whether entry blocks respect parity: entry (I,J) nonzero only if |I|+|J| even
bool is_even_operator(const SMatrix& a, const ParityVector& parities, int n);

// result^{J1}_{I1} = sum_{i,j} C^i_j A^{J1 j}_{I1 i}  (trace out the last slot)
SMatrix ctrace_last(const SMatrix& a, const SMatrix& c_matrix, int d, int n);

int rank(const SMatrix& a);
std::optional<SMatrix> inverse(const SMatrix& a);

// basis of {X : X G = G X for all generators}; for an empty generator list the
// whole matrix space. Deterministic order.
std::vector<SMatrix> commutant_basis(const std::vector<SMatrix>& generators, int dim);

}  // namespace qhaar
