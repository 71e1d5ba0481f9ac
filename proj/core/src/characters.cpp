#include "qhaar/characters.hpp"

#include <algorithm>

#include "qhaar/detail/sym_cache.hpp"

namespace qhaar {

namespace {

SMatrix tensor_power(const SMatrix& m, int n) {
  SMatrix out = SMatrix::identity(1);
  for (int i = 0; i < n; ++i) out = kron(out, m);
  return out;
}

SMatrix diag_power(const KPoint& pt, int n) {
  int d = static_cast<int>(pt.diag.size());
  SMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = pt.diag[i];
  return tensor_power(m, n);
}

Scalar char_prefactor(const HeckeSymmetry& sym, int n) {
  // q^{n(r-s+1)/2} = p^{n(r-s+1)}
  return Scalar::p_pow(n * (sym.birank_r - sym.birank_s + 1));
}

}  // namespace

bool kpoint_valid(const HeckeSymmetry& sym, const KPoint& pt) {
  if (static_cast<int>(pt.diag.size()) != sym.d) return false;
  int d = sym.d;
  const auto& par = sym.parities;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          Scalar lhs, rhs;
          for (int p = 1; p <= d; ++p)
            for (int s = 1; s <= d; ++s) {
              const Scalar& rv = sym.R.at(sym.pair_index(k, l), sym.pair_index(p, s));
              if (rv.is_zero() || p != i || s != j) continue;
              Scalar c = rv * pt.diag[i - 1] * pt.diag[j - 1];
              if (par[s - 1] & ((par[i - 1] + par[p - 1]) & 1)) c = -c;
              lhs += c;
            }
          for (int q = 1; q <= d; ++q)
            for (int n = 1; n <= d; ++n) {
              const Scalar& rv = sym.R.at(sym.pair_index(q, n), sym.pair_index(i, j));
              if (rv.is_zero() || q != k || n != l) continue;
              Scalar c = rv * pt.diag[k - 1] * pt.diag[l - 1];
              if (par[l - 1] & ((par[q - 1] + par[k - 1]) & 1)) c = -c;
              rhs += c;
            }
          if (lhs != rhs) return false;
        }
  return true;
}

Calibration character_calibration(const HeckeSymmetry& sym) {
  SymmetryCache& cache = detail::cache_of(sym);
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (!cache.calibration) {
    SymmetryCache::Calibration cal;
    cal.gamma = Scalar(1);
    cal.consistent = false;
    int r = sym.birank_r, s = sym.birank_s;
    Scalar pref = Scalar::p_pow(r - s + 1);
    bool diagonal = true;
    for (int i = 0; i < sym.d && diagonal; ++i)
      for (int j = 0; j < sym.d; ++j)
        if (i != j && !sym.D.at(i, j).is_zero()) {
          diagonal = false;
          break;
        }
    if (diagonal) {
      bool first = true, ok = true;
      Scalar gamma;
      for (int i = 1; i <= sym.d && ok; ++i) {
        Scalar target = (i <= r) ? Scalar::q_pow(i) : -Scalar::q_pow(r + 1 - (i - r));
        Scalar eng = pref * sym.D.at(i - 1, i - 1);
        if (eng.is_zero()) {
          ok = false;
          break;
        }
        Scalar ratio = target / eng;
        if (first) {
          gamma = ratio;
          first = false;
        } else if (ratio != gamma) {
          ok = false;
        }
      }
      if (ok && !first) {
        cal.gamma = gamma;
        cal.consistent = true;
      }
    }
    cache.calibration = std::move(cal);
  }
  Calibration out;
  out.gamma = cache.calibration->gamma;
  out.status = cache.calibration->consistent ? Calibration::Status::Fitted
                                             : Calibration::Status::NoScalarFit;
  return out;
}

namespace {

SMatrix calibrated_d_power(const HeckeSymmetry& sym, int n) {
  const Calibration& cal = character_calibration(sym);
  SMatrix d_used = cal.gamma * sym.D;
  return tensor_power(d_used, n);
}

}  // namespace

ECoefficient character(const HeckeSymmetry& sym, const Partition& lambda, int tableau_index) {
  int n = lambda.weight();
  const Rep& rep = Rep::get(sym, n);
  auto tabs = standard_tableaux(lambda);
  ECoefficient out;
  out.n = n;
  out.z_side = true;
  out.coef = char_prefactor(sym, n) *
             (calibrated_d_power(sym, n) * rep.rho(dipper_james_idempotent(tabs.at(tableau_index))));
  return out;
}

ECoefficient character_dual(const HeckeSymmetry& sym, const Partition& lambda, int tableau_index) {
  int n = lambda.weight();
  const Rep& rep = Rep::get(sym, n);
  auto tabs = standard_tableaux(lambda);
  ECoefficient out;
  out.n = n;
  out.z_side = false;
  out.coef = char_prefactor(sym, n) *
             (tensor_power(sym.C, n) * rep.rho(dipper_james_idempotent(tabs.at(tableau_index))));
  return out;
}

Scalar evaluate(const HeckeSymmetry& sym, const ECoefficient& coef, const KPoint& point) {
  if (static_cast<int>(point.diag.size()) != sym.d)
    throw std::invalid_argument("point dimension mismatch");
  // diagonal points: both sides reduce to sum_A coef[A,A] prod_x m_x
  Scalar out;
  int dim = coef.coef.rows();
  for (int a = 0; a < dim; ++a) {
    const Scalar& c = coef.coef.at(a, a);
    if (c.is_zero()) continue;
    Scalar prod = 1;
    for (int x : decode(a, sym.d, coef.n)) prod *= point.diag[x - 1];
    out += c * prod;
  }
  return out;
}

Scalar complete_h(int k, const std::vector<Scalar>& vars) {
  if (k < 0) return {};
  if (k == 0) return 1;
  // h_k via iterated accumulation: sum over multisets
  int m = static_cast<int>(vars.size());
  if (m == 0) return {};
  // dp[j] = h_j in the first i variables
  std::vector<Scalar> dp(k + 1);
  dp[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= k; ++j) dp[j] += vars[i] * dp[j - 1];
  return dp[k];
}

Scalar elementary_e(int k, const std::vector<Scalar>& vars) {
  if (k < 0) return {};
  if (k == 0) return 1;
  int m = static_cast<int>(vars.size());
  if (k > m) return {};
  std::vector<Scalar> dp(k + 1);
  dp[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j) dp[j] += vars[i] * dp[j - 1];
  return dp[k];
}

Scalar schur(const Partition& mu, const std::vector<Scalar>& vars) {
  int l = mu.rows();
  if (l == 0) return 1;
  if (static_cast<int>(vars.size()) < l && mu.part(static_cast<int>(vars.size()) + 1) > 0) {
    // more rows than variables: Schur polynomial vanishes
    if (l > static_cast<int>(vars.size())) return {};
  }
  std::vector<std::vector<Scalar>> m(l, std::vector<Scalar>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m[i][j] = complete_h(mu.part(i + 1) - (i + 1) + (j + 1), vars);
  // determinant by Gaussian elimination over the field
  Scalar det = 1;
  for (int col = 0; col < l; ++col) {
    int piv = -1;
    for (int row = col; row < l; ++row)
      if (!m[row][col].is_zero()) {
        piv = row;
        break;
      }
    if (piv < 0) return {};
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (int row = col + 1; row < l; ++row) {
      if (m[row][col].is_zero()) continue;
      Scalar f = m[row][col] * inv;
      for (int c = col; c < l; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return det;
}

Scalar hook_schur_factored(const HeckeSymmetry& sym, const Partition& lambda, const KPoint& m) {
  int r = sym.birank_r, s = sym.birank_s;
  if (!lambda.contains_rectangle(r, s))
    throw std::invalid_argument("partition does not contain the rectangle");
  auto [mu, nu] = rectangle_decompose(lambda, r, s);
  Scalar out = (nu.weight() & 1) ? Scalar(-1) : Scalar(1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j)
      out *= Scalar::q_pow(i) * m.diag[i - 1] - Scalar::q_pow(r - j + 1) * m.diag[r + j - 1];
  std::vector<Scalar> even_vars, odd_vars;
  for (int i = 1; i <= r; ++i) even_vars.push_back(Scalar::q_pow(i) * m.diag[i - 1]);
  for (int i = 1; i <= s; ++i) odd_vars.push_back(Scalar::q_pow(r + 1 - i) * m.diag[r + i - 1]);
  out *= schur(mu, even_vars);
  out *= schur(nu, odd_vars);
  return out;
}

Scalar hook_schur_factored_dual(const HeckeSymmetry& sym, const Partition& lambda, const KPoint& n) {
  int r = sym.birank_r, s = sym.birank_s;
  if (!lambda.contains_rectangle(r, s))
    throw std::invalid_argument("partition does not contain the rectangle");
  auto [mu, nu] = rectangle_decompose(lambda, r, s);
  Scalar out = (nu.weight() & 1) ? Scalar(-1) : Scalar(1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j)
      out *= Scalar::q_pow(r - s - i + 1) * n.diag[i - 1] - Scalar::q_pow(j - s) * n.diag[r + j - 1];
  std::vector<Scalar> even_vars, odd_vars;
  for (int i = 1; i <= r; ++i) even_vars.push_back(Scalar::q_pow(r - s + 1 - i) * n.diag[i - 1]);
  for (int i = 1; i <= s; ++i) odd_vars.push_back(Scalar::q_pow(i - s) * n.diag[r + i - 1]);
  out *= schur(mu, even_vars);
  out *= schur(nu, odd_vars);
  return out;
}

Scalar hciz_lhs(const HeckeSymmetry& sym, const KPoint& m, const KPoint& n, int degree) {
  int d = sym.d;
  int dim = TensorOperator::ipow(d, degree);
  SMatrix g = calibrated_d_power(sym, degree);
  Scalar out;
  for (int a = 0; a < dim; ++a) {
    MultiIndex ia = decode(a, d, degree);
    int ap = parity_sum(sym.parities, ia);
    for (int b = 0; b < dim; ++b) {
      const Scalar& gv = g.at(a, b);
      if (gv.is_zero()) continue;
      MultiIndex ib = decode(b, d, degree);
      Scalar mb = 1;
      for (int x : ib) mb *= m.diag[x - 1];
      for (int e = 0; e < dim; ++e) {
        MultiIndex ie = decode(e, d, degree);
        Scalar ne = 1;
        for (int x : ie) ne *= n.diag[x - 1];
        // term gv * m_B * n_E * Tbar-sign(E,A) * integral(Z^B_E T^{E'}_{A'})
        Monomial mono{ie, ib, reversed(ia), reversed(ie)};
        Scalar v = integrate_monomial(sym, mono);
        if (v.is_zero()) continue;
        int ep = parity_sum(sym.parities, ie);
        if (ap & ((ep + ap) & 1)) v = -v;
        out += gv * mb * ne * v;
      }
    }
  }
  return out;
}

Scalar hciz_rhs(const HeckeSymmetry& sym, const KPoint& m, const KPoint& n, int degree) {
  Scalar out;
  for (const Partition& lam : omega_set(sym.birank_r, sym.birank_s, degree)) {
    Scalar sm = evaluate(sym, character(sym, lam), m);
    Scalar sn = evaluate(sym, character_dual(sym, lam), n);
    out += Scalar(d_lambda(lam)) * p_lambda(lam, sym.birank_r, sym.birank_s) /
           k_lambda(lam) * sm * sn;
  }
  return Scalar::q_pow(-degree * (sym.birank_r - sym.birank_s + 1)) * out;
}

Scalar hciz_example_variant(const HeckeSymmetry& sym, const KPoint& m, const KPoint& n, int degree) {
  int d = sym.d;
  int dim = TensorOperator::ipow(d, degree);
  SMatrix g = tensor_power(sym.C, degree);
  Scalar out;
  for (int a = 0; a < dim; ++a) {
    MultiIndex ia = decode(a, d, degree);
    for (int c = 0; c < dim; ++c) {
      const Scalar& gv = g.at(a, c);
      if (gv.is_zero()) continue;
      MultiIndex ic = decode(c, d, degree);
      Scalar nc = 1;
      for (int x : ic) nc *= n.diag[x - 1];
      for (int e = 0; e < dim; ++e) {
        MultiIndex ie = decode(e, d, degree);
        Scalar me = 1;
        for (int x : ie) me *= m.diag[x - 1];
        Monomial mono{ie, ic, ia, ie};  // Z^C_E T^E_A, plain tensor symbols
        Scalar v = integrate_monomial(sym, mono);
        if (v.is_zero()) continue;
        out += gv * nc * me * v;
      }
    }
  }
  return out;
}

Scalar quantum_rank(const HeckeSymmetry& sym, const Partition& lambda) {
  int n = lambda.weight();
  const Rep& rep = Rep::get(sym, n);
  auto tabs = standard_tableaux(lambda);
  return (tensor_power(sym.C, n) * rep.rho(dipper_james_idempotent(tabs.front()))).trace();
}

MatrixUnits matrix_units(const HeckeSymmetry& sym, const Partition& lambda) {
  int n = lambda.weight();
  const Rep& rep = Rep::get(sym, n);
  SMatrix pi = rep.rho(dipper_james_idempotent(standard_tableaux(lambda).front()));
  int dim = rep.dim();
  // column-reduced echelon basis of Im(pi)
  std::vector<std::vector<Scalar>> basis;   // selected original columns
  std::vector<std::vector<Scalar>> reduced; // running echelon forms
  std::vector<int> pivots;
  for (int col = 0; col < dim; ++col) {
    std::vector<Scalar> v(dim);
    bool nonzero = false;
    for (int rr = 0; rr < dim; ++rr) {
      v[rr] = pi.at(rr, col);
      if (!v[rr].is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    for (size_t bdx = 0; bdx < reduced.size(); ++bdx) {
      int pv = pivots[bdx];
      if (!v[pv].is_zero()) {
        Scalar f = v[pv] / reduced[bdx][pv];
        for (int rr = 0; rr < dim; ++rr)
          if (!reduced[bdx][rr].is_zero()) v[rr] -= f * reduced[bdx][rr];
      }
    }
    int pos = -1;
    for (int rr = 0; rr < dim; ++rr)
      if (!v[rr].is_zero()) {
        pos = rr;
        break;
      }
    if (pos < 0) continue;
    pivots.push_back(pos);
    reduced.push_back(v);
    std::vector<Scalar> orig(dim);
    for (int rr = 0; rr < dim; ++rr) orig[rr] = pi.at(rr, col);
    basis.push_back(std::move(orig));
  }
  int m = static_cast<int>(basis.size());
  // coordinates S with E S = pi  (pi fixes its image pointwise)
  std::vector<std::vector<Scalar>> aug(dim, std::vector<Scalar>(m + dim));
  for (int rr = 0; rr < dim; ++rr) {
    for (int bb = 0; bb < m; ++bb) aug[rr][bb] = basis[bb][rr];
    for (int cc = 0; cc < dim; ++cc) aug[rr][m + cc] = pi.at(rr, cc);
  }
  int rk = 0;
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int rr = rk; rr < dim; ++rr)
      if (!aug[rr][col].is_zero()) {
        piv = rr;
        break;
      }
    std::swap(aug[rk], aug[piv]);
    Scalar inv = aug[rk][col].inverse();
    for (int cc = col; cc < m + dim; ++cc)
      if (!aug[rk][cc].is_zero()) aug[rk][cc] *= inv;
    for (int rr = 0; rr < dim; ++rr) {
      if (rr == rk || aug[rr][col].is_zero()) continue;
      Scalar f = aug[rr][col];
      for (int cc = col; cc < m + dim; ++cc)
        if (!aug[rk][cc].is_zero()) aug[rr][cc] -= f * aug[rk][cc];
    }
    ++rk;
  }
  MatrixUnits out;
  out.m = m;
  out.units.reserve(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      SMatrix u(dim, dim);
      for (int rr = 0; rr < dim; ++rr) {
        if (basis[a][rr].is_zero()) continue;
        for (int cc = 0; cc < dim; ++cc) {
          const Scalar& s = aug[b][m + cc];
          if (!s.is_zero()) u.at(rr, cc) = basis[a][rr] * s;
        }
      }
      out.units.push_back(std::move(u));
    }
  }
  return out;
}

std::vector<OrthoRow> check_orthogonality(const HeckeSymmetry& sym, const Partition& lambda) {
  int n = lambda.weight();
  MatrixUnits units = matrix_units(sym, lambda);
  SMatrix cn = tensor_power(sym.C, n);
  auto omega = omega_set(sym.birank_r, sym.birank_s, n);
  bool in_omega = std::find(omega.begin(), omega.end(), lambda) != omega.end();
  Scalar weight;
  if (in_omega)
    weight = p_lambda(lambda, sym.birank_r, sym.birank_s) / k_lambda(lambda);
  std::vector<OrthoRow> rows;
  for (int a = 0; a < units.m; ++a)
    for (int b = 0; b < units.m; ++b)
      for (int c = 0; c < units.m; ++c)
        for (int dd = 0; dd < units.m; ++dd) {
          OrthoRow row;
          row.a = a;
          row.b = b;
          row.c = c;
          row.d = dd;
          row.integral = paired_trace_integral(sym, units.at(a, b), units.at(c, dd), n);
          if (b == c && in_omega) row.expected = weight * (cn * units.at(a, dd)).trace();
          row.equal = (row.integral == row.expected);
          rows.push_back(std::move(row));
        }
  return rows;
}

}  // namespace qhaar
