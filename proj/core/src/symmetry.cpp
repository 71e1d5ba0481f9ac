#include "qhaar/symmetry.hpp"

#include "qhaar/hecke.hpp"

namespace qhaar {

SMatrix closure_inverse(const SMatrix& r_matrix, int d) {
  int dd = d * d;
  auto ix = [d](int a, int b) { return (a - 1) * d + (b - 1); };
  // B[(k,l),(m,n)] = R^{nk}_{ml}; solve B X = RHS with RHS[(k,l),(i,j)] = [i==l][k==j]
  SMatrix b_mat(dd, dd), rhs(dd, dd);
  for (int k = 1; k <= d; ++k)
    for (int l = 1; l <= d; ++l)
      for (int m = 1; m <= d; ++m)
        for (int n = 1; n <= d; ++n)
          b_mat.at(ix(k, l), ix(m, n)) = r_matrix.at(ix(n, k), ix(m, l));
  for (int k = 1; k <= d; ++k)
    for (int l = 1; l <= d; ++l)
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
          if (i == l && k == j) rhs.at(ix(k, l), ix(i, j)) = 1;
  auto binv = inverse(b_mat);
  if (!binv) throw NotClosedError();
  SMatrix x = *binv * rhs;
  SMatrix p(dd, dd);
  for (int i = 1; i <= d; ++i)
    for (int m = 1; m <= d; ++m)
      for (int j = 1; j <= d; ++j)
        for (int n = 1; n <= d; ++n)
          p.at(ix(i, m), ix(j, n)) = x.at(ix(m, n), ix(i, j));
  return p;
}

std::pair<SMatrix, SMatrix> reflection_ops(const SMatrix& p_matrix, int d) {
  auto ix = [d](int a, int b) { return (a - 1) * d + (b - 1); };
  SMatrix c(d, d), dd(d, d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      Scalar cv, dv;
      for (int l = 1; l <= d; ++l) {
        cv += p_matrix.at(ix(i, l), ix(j, l));
        dv += p_matrix.at(ix(l, i), ix(l, j));
      }
      c.at(i - 1, j - 1) = std::move(cv);
      dd.at(i - 1, j - 1) = std::move(dv);
    }
  }
  return {c, dd};
}

HeckeSymmetry make_symmetry(int d, ParityVector parities, SMatrix r_matrix,
                            int birank_r, int birank_s, std::string name) {
  HeckeSymmetry sym;
  sym.d = d;
  sym.parities = std::move(parities);
  sym.R = std::move(r_matrix);
  sym.P = closure_inverse(sym.R, d);
  auto cd = reflection_ops(sym.P, d);
  sym.C = std::move(cd.first);
  sym.D = std::move(cd.second);
  sym.birank_r = birank_r;
  sym.birank_s = birank_s;
  sym.name = std::move(name);
  return sym;
}

HeckeSymmetry build_drinfeld_jimbo(int r) {
  if (r < 1) throw std::invalid_argument("need r >= 1");
  int d = r;
  SMatrix R(d * d, d * d);
  auto ix = [d](int a, int b) { return (a - 1) * d + (b - 1); };
  Scalar q = Scalar::q_pow(1), p = Scalar::p_pow(1);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i == j) {
        R.at(ix(i, i), ix(i, i)) = q;
      } else {
        if (i > j) R.at(ix(i, j), ix(i, j)) = q - Scalar(1);  // k=i>j=l
        R.at(ix(j, i), ix(i, j)) = p;                          // k=j != i=l
      }
    }
  }
  return make_symmetry(d, ParityVector(d, 0), std::move(R), r, 0,
                       "glq:" + std::to_string(r));
}

HeckeSymmetry build_manin_super(int r, int s) {
  if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("need r,s >= 0, r+s >= 1");
  int d = r + s;
  ParityVector par(d, 0);
  for (int i = r; i < d; ++i) par[i] = 1;
  SMatrix R(d * d, d * d);
  auto ix = [d](int a, int b) { return (a - 1) * d + (b - 1); };
  Scalar q = Scalar::q_pow(1), p = Scalar::p_pow(1);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i == j) {
        R.at(ix(i, i), ix(i, i)) = par[i - 1] ? Scalar(-1) : q;
      } else {
        if (i < j) R.at(ix(i, j), ix(i, j)) = q - Scalar(1);  // k=i<j=l
        R.at(ix(j, i), ix(i, j)) = (par[i - 1] && par[j - 1]) ? -p : p;
      }
    }
  }
  std::string name = "glq:" + std::to_string(r) + "|" + std::to_string(s);
  return make_symmetry(d, std::move(par), std::move(R), r, s, std::move(name));
}

ValidationReport validate(const HeckeSymmetry& sym) {
  ValidationReport report;
  int d = sym.d;
  Scalar q = Scalar::q_pow(1);
  {
    SMatrix r1 = embed(sym.R, 1, 3, d);
    SMatrix r2 = embed(sym.R, 2, 3, d);
    bool ok = (r1 * r2 * r1 == r2 * r1 * r2);
    report.checks.push_back({"yang_baxter", ok, "R1 R2 R1 = R2 R1 R2 on V^(x)3"});
  }
  {
    SMatrix id = SMatrix::identity(d * d);
    bool ok = ((sym.R - q * id) * (sym.R + id)).is_zero();
    report.checks.push_back({"hecke_relation", ok, "(R - q)(R + 1) = 0"});
  }
  {
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i)
      for (int k = 1; k <= d && ok; ++k)
        for (int j = 1; j <= d && ok; ++j)
          for (int l = 1; l <= d && ok; ++l) {
            Scalar v;
            for (int m = 1; m <= d; ++m)
              for (int n = 1; n <= d; ++n) v += sym.p_entry(i, m, j, n) * sym.r_entry(n, k, m, l);
            Scalar want = (i == l && k == j) ? Scalar(1) : Scalar(0);
            if (v != want) ok = false;
          }
    report.checks.push_back({"closure", ok, "P^{im}_{jn} R^{nk}_{ml} = delta^i_l delta^k_j"});
  }
  {
    bool ok = is_even_operator(sym.R, sym.parities, 2) && is_even_operator(sym.P, sym.parities, 2) &&
              is_even_operator(sym.C, sym.parities, 1) && is_even_operator(sym.D, sym.parities, 1);
    report.checks.push_back({"evenness", ok, "R, P, C, D are even"});
  }
  {
    Scalar want = -q_int(sym.birank_s - sym.birank_r);
    Scalar have = sym.C.trace();
    bool ok = (have == want);
    report.checks.push_back(
        {"trace_assumption", ok, "tr(C) = " + have.to_string() + ", -[s-r]_q = " + want.to_string()});
  }
  return report;
}

CdReport check_cd_relation(const HeckeSymmetry& sym) {
  CdReport rep;
  SMatrix cd = sym.C * sym.D;
  SMatrix dc = sym.D * sym.C;
  rep.commute = (cd == dc);
  Scalar diag = cd.at(0, 0);
  rep.is_scalar = (cd == diag * SMatrix::identity(sym.d));
  if (rep.is_scalar) rep.scalar = diag;
  Scalar qinv = Scalar::q_pow(-1);
  rep.candidate = qinv - (qinv - Scalar(1)) * sym.C.trace();
  rep.matches_candidate = rep.is_scalar && rep.scalar == rep.candidate;
  return rep;
}

std::vector<int> poincare_prefix(const HeckeSymmetry& sym, int max_degree) {
  std::vector<int> out;
  out.push_back(1);  // Lambda_0 = K
  for (int n = 1; n <= max_degree; ++n) {
    const Rep& rep = Rep::get(sym, n);
    HeckeElement yn = antisymmetrizer(n);
    out.push_back(rank(rep.rho(yn)));
  }
  return out;
}

}  // namespace qhaar
