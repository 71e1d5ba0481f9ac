#pragma once

#include "qhaar/haar.hpp"

namespace qhaar {

// Coefficient tensor of a character: sum_{A,B} coef[A,B] Z^B_A (z side) or
// sum coef[A,B] Tbar[B,A] (t side), Tbar the antipode-image matrix.
struct ECoefficient {
  int n = 0;
  bool z_side = true;
  SMatrix coef;
};

struct KPoint {
  std::vector<Scalar> diag;
};

// whether the diagonal point satisfies the quadratic relations of the symmetry
bool kpoint_valid(const HeckeSymmetry& sym, const KPoint& pt);

// Global character scale: smallest-degree character matched against the
// closed-form weights q^i m_i (even slots) and -q^{r+1-j} m_{r+j} (odd slots).
struct Calibration {
  enum class Status { Fitted, NoScalarFit };
  Scalar gamma = Scalar(1);
  Status status = Status::NoScalarFit;
};

Calibration character_calibration(const HeckeSymmetry& sym);

ECoefficient character(const HeckeSymmetry& sym, const Partition& lambda, int tableau_index = 0);
ECoefficient character_dual(const HeckeSymmetry& sym, const Partition& lambda, int tableau_index = 0);

Scalar evaluate(const HeckeSymmetry& sym, const ECoefficient& coef, const KPoint& point);

Scalar complete_h(int k, const std::vector<Scalar>& vars);
Scalar elementary_e(int k, const std::vector<Scalar>& vars);
Scalar schur(const Partition& mu, const std::vector<Scalar>& vars);  // Jacobi-Trudi

// Closed factored form for lambda containing the r x s rectangle (standard
// super symmetry); equals evaluate(character(lambda), M) after calibration.
Scalar hook_schur_factored(const HeckeSymmetry& sym, const Partition& lambda, const KPoint& m);
Scalar hook_schur_factored_dual(const HeckeSymmetry& sym, const Partition& lambda, const KPoint& n);

Scalar hciz_lhs(const HeckeSymmetry& sym, const KPoint& m, const KPoint& n, int degree);
Scalar hciz_rhs(const HeckeSymmetry& sym, const KPoint& m, const KPoint& n, int degree);
// the alternate trace ordering tr(C^n N^n Z^n M^n T^n); reported, not asserted
Scalar hciz_example_variant(const HeckeSymmetry& sym, const KPoint& m, const KPoint& n, int degree);

Scalar quantum_rank(const HeckeSymmetry& sym, const Partition& lambda);

// Maximal system P^a_b with P^a_b P^c_d = delta^c_b P^a_d on Im rho(E_lambda);
// basis from column-reduced echelon form of the image.
struct MatrixUnits {
  int m = 0;  // comodule dimension
  std::vector<SMatrix> units;
  const SMatrix& at(int a, int b) const { return units[a * m + b]; }
};

MatrixUnits matrix_units(const HeckeSymmetry& sym, const Partition& lambda);

struct OrthoRow {
  int a, b, c, d;
  Scalar integral;
  Scalar expected;
  bool equal;
};

// integral(Z_lambda^a_b Z_{-lambda}^c_d) = k^{-1} p delta^c_b (C_lambda)^a_d
std::vector<OrthoRow> check_orthogonality(const HeckeSymmetry& sym, const Partition& lambda);

}  // namespace qhaar
