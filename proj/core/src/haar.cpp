#include "qhaar/haar.hpp"

#include <algorithm>

#include "qhaar/detail/sym_cache.hpp"

namespace qhaar {

namespace {

SMatrix tensor_power(const SMatrix& m, int n) {
  SMatrix out = SMatrix::identity(1);
  for (int i = 0; i < n; ++i) out = kron(out, m);
  return out;
}

}  // namespace

SMatrix p_operator(const HeckeSymmetry& sym, int n) {
  SymmetryCache& cache = detail::cache_of(sym);
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.p_ops.find(n);
    if (it != cache.p_ops.end()) return *it->second;
  }
  SMatrix out;
  if (n == 0) {
    out = SMatrix(1, 1);
    if (sym.birank_r == 0 || sym.birank_s == 0) out.at(0, 0) = 1;
  } else {
    const Rep& rep = Rep::get(sym, n);
    out = SMatrix(rep.dim(), rep.dim());
    for (const Partition& lam : omega_set(sym.birank_r, sym.birank_s, n))
      out += p_lambda(lam, sym.birank_r, sym.birank_s) * rep.rho(central_idempotent(lam));
  }
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.p_ops.find(n);
  if (it == cache.p_ops.end()) it = cache.p_ops.emplace(n, std::make_shared<SMatrix>(out)).first;
  return *it->second;
}

bool check_recursion(const HeckeSymmetry& sym, int n) {
  const Rep& rep = Rep::get(sym, n + 1);
  SMatrix lhs = p_operator(sym, n + 1) *
                (rep.rho(murphy(n + 1, n + 1)) -
                 q_int(sym.birank_s - sym.birank_r) * SMatrix::identity(rep.dim()));
  SMatrix rhs = kron(p_operator(sym, n), SMatrix::identity(sym.d));
  return lhs == rhs;
}

const IntegralTensor& integral_tensor(const HeckeSymmetry& sym, int n) {
  SymmetryCache& cache = detail::cache_of(sym);
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.integrals.find(n);
    if (it != cache.integrals.end()) return *it->second;
  }
  auto tensor = std::make_shared<IntegralTensor>();
  tensor->n = n;
  SMatrix pc = p_operator(sym, n) * tensor_power(sym.C, n);
  const Rep& rep = Rep::get(sym, n);
  for (const Permutation& w : all_permutations(n)) {
    IntegralTensor::Term t;
    t.weight = Scalar::q_pow(-length(w));
    t.a = pc * rep.r_w(w.inverse());
    t.b = rep.r_w(w);
    tensor->terms.push_back(std::move(t));
  }
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.integrals.find(n);
  if (it == cache.integrals.end()) it = cache.integrals.emplace(n, tensor).first;
  return *it->second;
}

Scalar integrate_monomial(const HeckeSymmetry& sym, const Monomial& m) {
  size_t n = m.I.size();
  if (m.J.size() != n || m.K.size() != m.L.size()) throw std::invalid_argument("bad monomial");
  if (m.K.size() != n) return {};
  if (static_cast<int>(n) < sym.birank_r * sym.birank_s) return {};
  const IntegralTensor& tensor = integral_tensor(sym, static_cast<int>(n));
  int row_a = encode(reversed(m.L), sym.d);
  int col_a = encode(m.I, sym.d);
  int row_b = encode(m.J, sym.d);
  int col_b = encode(reversed(m.K), sym.d);
  Scalar out;
  for (const auto& t : tensor.terms) {
    const Scalar& av = t.a.at(row_a, col_a);
    if (av.is_zero()) continue;
    const Scalar& bv = t.b.at(row_b, col_b);
    if (bv.is_zero()) continue;
    out += t.weight * av * bv;
  }
  if (out.is_zero()) return out;
  int kp = parity_sum(sym.parities, m.K);
  int lp = parity_sum(sym.parities, m.L);
  if (kp & ((kp + lp) & 1)) out = -out;
  return out;
}

void FreeElement::add_term(FreeWord w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  FreeElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
  FreeElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      FreeWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(std::move(w), ca * cb);
    }
  }
  return out;
}

FreeElement operator*(const Scalar& c, const FreeElement& a) {
  FreeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
  return out;
}

namespace {

// exchange t^j_i z^l_k -> sum (-1)^{l^(i^+j^)+r^(p^+q^)} R^{jp}_{ks} P^{rl}_{qi} z^q_p t^s_r
void exchange_at(const HeckeSymmetry& sym, const FreeWord& w, size_t pos, const Scalar& coef,
                 std::vector<std::pair<FreeWord, Scalar>>& out) {
  int j = w[pos].upper, i = w[pos].lower;
  int l = w[pos + 1].upper, k = w[pos + 1].lower;
  const auto& par = sym.parities;
  int lhs_exp = par[l - 1] & ((par[i - 1] + par[j - 1]) & 1);
  for (int p = 1; p <= sym.d; ++p) {
    for (int s = 1; s <= sym.d; ++s) {
      const Scalar& rv = sym.R.at(sym.pair_index(j, p), sym.pair_index(k, s));
      if (rv.is_zero()) continue;
      for (int q = 1; q <= sym.d; ++q) {
        for (int r = 1; r <= sym.d; ++r) {
          const Scalar& pv = sym.P.at(sym.pair_index(r, l), sym.pair_index(q, i));
          if (pv.is_zero()) continue;
          int expo = lhs_exp ^ (par[r - 1] & ((par[p - 1] + par[q - 1]) & 1));
          Scalar c = coef * rv * pv;
          if (expo) c = -c;
          FreeWord nw = w;
          nw[pos] = GenSymbol{false, q, p};
          nw[pos + 1] = GenSymbol{true, s, r};
          out.emplace_back(std::move(nw), std::move(c));
        }
      }
    }
  }
}

std::optional<size_t> find_inversion(const FreeWord& w, ReorderStrategy strategy) {
  if (strategy == ReorderStrategy::LeftmostFirst) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].is_t && !w[i + 1].is_t) return i;
  } else {
    for (size_t i = w.size(); i >= 2; --i)
      if (w[i - 2].is_t && !w[i - 1].is_t) return i - 2;
  }
  return std::nullopt;
}

}  // namespace

FreeElement reorder(const HeckeSymmetry& sym, const FreeElement& x, ReorderStrategy strategy) {
  std::vector<std::pair<FreeWord, Scalar>> work(x.terms().begin(), x.terms().end());
  FreeElement done;
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    auto pos = find_inversion(w, strategy);
    if (!pos) {
      done.add_term(std::move(w), c);
      continue;
    }
    exchange_at(sym, w, *pos, c, work);
  }
  return done;
}

Scalar integrate_element(const HeckeSymmetry& sym, const FreeElement& x,
                         ReorderStrategy strategy) {
  FreeElement normal = reorder(sym, x, strategy);
  Scalar out;
  for (const auto& [w, c] : normal.terms()) {
    MultiIndex zu, zl, tu, tl;
    for (const auto& g : w) {
      if (g.is_t) {
        tu.push_back(g.upper);
        tl.push_back(g.lower);
      } else {
        zu.push_back(g.upper);
        zl.push_back(g.lower);
      }
    }
    if (zu.size() != tu.size()) continue;  // integral vanishes off the balanced part
    Monomial m{zl, zu, tl, tu};
    Scalar v = integrate_monomial(sym, m);
    if (v.is_zero()) continue;
    // t-symbols carry the sign recursion with the lower sequence first: the
    // t-side coproduct composes in the flipped order
    int sgn = sign_factor(sym.parities, zu, zl) * sign_factor(sym.parities, tl, tu);
    out += (sgn < 0 ? -(c * v) : c * v);
  }
  return out;
}

std::vector<FreeElement> relation_elements(const HeckeSymmetry& sym, RelationKind kind) {
  std::vector<FreeElement> out;
  int d = sym.d;
  const auto& par = sym.parities;
  auto sgn1 = [](int expo) { return expo & 1 ? Scalar(-1) : Scalar(1); };
  switch (kind) {
    case RelationKind::ZZ:
    case RelationKind::TT: {
      bool tt = (kind == RelationKind::TT);
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
          for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
              FreeElement e;
              for (int p = 1; p <= d; ++p)
                for (int s = 1; s <= d; ++s) {
                  const Scalar& rv = sym.R.at(sym.pair_index(k, l), sym.pair_index(p, s));
                  if (rv.is_zero()) continue;
                  Scalar c = sgn1(par[s - 1] & ((par[i - 1] + par[p - 1]) & 1)) * rv;
                  FreeWord w = tt ? FreeWord{{true, s, j}, {true, p, i}}
                                  : FreeWord{{false, p, i}, {false, s, j}};
                  e.add_term(std::move(w), c);
                }
              for (int q = 1; q <= d; ++q)
                for (int m = 1; m <= d; ++m) {
                  const Scalar& rv = sym.R.at(sym.pair_index(q, m), sym.pair_index(i, j));
                  if (rv.is_zero()) continue;
                  Scalar c = sgn1(par[l - 1] & ((par[q - 1] + par[k - 1]) & 1)) * rv;
                  FreeWord w = tt ? FreeWord{{true, l, m}, {true, k, q}}
                                  : FreeWord{{false, k, q}, {false, l, m}};
                  e.add_term(std::move(w), -c);
                }
              if (!e.is_zero()) out.push_back(std::move(e));
            }
      break;
    }
    case RelationKind::ZT: {
      // sum_j (-1)^{k^(j^+k^)} z^i_j t^j_k = delta^i_k  (sign fixed by the antipode)
      for (int i = 1; i <= d; ++i)
        for (int k = 1; k <= d; ++k) {
          FreeElement e;
          for (int j = 1; j <= d; ++j) {
            Scalar c = sgn1(par[k - 1] & ((par[j - 1] + par[k - 1]) & 1));
            e.add_term(FreeWord{{false, i, j}, {true, j, k}}, c);
          }
          if (i == k) e.add_term({}, -1);
          out.push_back(std::move(e));
        }
      break;
    }
    case RelationKind::TZ: {
      for (int i = 1; i <= d; ++i)
        for (int k = 1; k <= d; ++k) {
          FreeElement e;
          for (int l = 1; l <= d; ++l) {
            Scalar c = sgn1(par[l - 1] & ((par[l - 1] + par[i - 1]) & 1));
            e.add_term(FreeWord{{true, i, l}, {false, l, k}}, c);
          }
          if (i == k) e.add_term({}, -1);
          out.push_back(std::move(e));
        }
      break;
    }
    case RelationKind::MixedExchange: {
      for (int p = 1; p <= d; ++p)
        for (int q = 1; q <= d; ++q)
          for (int i = 1; i <= d; ++i)
            for (int k = 1; k <= d; ++k) {
              FreeElement e;
              for (int j = 1; j <= d; ++j)
                for (int l = 1; l <= d; ++l) {
                  const Scalar& rv = sym.R.at(sym.pair_index(p, j), sym.pair_index(q, l));
                  if (rv.is_zero()) continue;
                  Scalar c = sgn1(par[k - 1] & ((par[i - 1] + par[j - 1]) & 1)) * rv;
                  e.add_term(FreeWord{{false, i, j}, {true, l, k}}, c);
                }
              for (int n = 1; n <= d; ++n)
                for (int m = 1; m <= d; ++m) {
                  const Scalar& rv = sym.R.at(sym.pair_index(n, i), sym.pair_index(m, k));
                  if (rv.is_zero()) continue;
                  Scalar c = sgn1(par[m - 1] & ((par[n - 1] + par[p - 1]) & 1)) * rv;
                  e.add_term(FreeWord{{true, p, n}, {false, m, q}}, -c);
                }
              if (!e.is_zero()) out.push_back(std::move(e));
            }
      break;
    }
  }
  return out;
}

std::vector<FreeElement> all_relation_elements(const HeckeSymmetry& sym) {
  std::vector<FreeElement> out;
  for (RelationKind kind : {RelationKind::ZZ, RelationKind::ZT, RelationKind::TZ,
                            RelationKind::MixedExchange, RelationKind::TT}) {
    auto rels = relation_elements(sym, kind);
    out.insert(out.end(), std::make_move_iterator(rels.begin()), std::make_move_iterator(rels.end()));
  }
  return out;
}

bool check_condition_i(const HeckeSymmetry& sym, int n) {
  const IntegralTensor& tensor = integral_tensor(sym, n);
  int dim = TensorOperator::ipow(sym.d, n);
  for (int i = 1; i <= n - 1; ++i) {
    SMatrix ri = embed(sym.R, i, n, sym.d);
    SMatrix diff(dim * dim, dim * dim);
    for (const auto& t : tensor.terms)
      diff += t.weight * (kron(ri * t.a, t.b) - kron(t.a, t.b * ri));
    if (!diff.is_zero()) return false;
  }
  return true;
}

bool check_condition_ii(const HeckeSymmetry& sym, int n) {
  if (n < 1) throw std::invalid_argument("condition (ii) needs degree >= 1");
  const IntegralTensor& tn = integral_tensor(sym, n);
  const IntegralTensor& tm = integral_tensor(sym, n - 1);
  int d = sym.d;
  int dim = TensorOperator::ipow(d, n);
  int dim1 = TensorOperator::ipow(d, n - 1);
  // delta contraction: trace the last slot of the first factor
  {
    SMatrix lhs(dim1 * dim1, dim * dim), rhs(dim1 * dim1, dim * dim);
    SMatrix id_d = SMatrix::identity(d);
    for (const auto& t : tn.terms) {
      SMatrix pt = ctrace_last(t.a, id_d, d, n);
      for (int r = 0; r < dim1; ++r)
        for (int c = 0; c < dim1; ++c) {
          const Scalar& av = pt.at(r, c);
          if (av.is_zero()) continue;
          Scalar wav = t.weight * av;
          for (int rb = 0; rb < dim; ++rb)
            for (int cb = 0; cb < dim; ++cb) {
              const Scalar& bv = t.b.at(rb, cb);
              if (bv.is_zero()) continue;
              lhs.at(r * dim1 + c, rb * dim + cb) += wav * bv;
            }
        }
    }
    for (const auto& t : tm.terms) {
      for (int r = 0; r < dim1; ++r)
        for (int c = 0; c < dim1; ++c) {
          const Scalar& av = t.a.at(r, c);
          if (av.is_zero()) continue;
          Scalar wav = t.weight * av;
          for (int rb = 0; rb < dim1; ++rb)
            for (int cb = 0; cb < dim1; ++cb) {
              const Scalar& bv = t.b.at(rb, cb);
              if (bv.is_zero()) continue;
              Scalar v = wav * bv;
              for (int x = 0; x < d; ++x)
                rhs.at(r * dim1 + c, (rb * d + x) * dim + cb * d + x) += v;
            }
        }
    }
    if (lhs != rhs) return false;
  }
  // C contraction: C-trace the last slot of the second factor
  {
    SMatrix lhs(dim * dim, dim1 * dim1), rhs(dim * dim, dim1 * dim1);
    for (const auto& t : tn.terms) {
      SMatrix hb = ctrace_last(t.b, sym.C, d, n);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          const Scalar& av = t.a.at(r, c);
          if (av.is_zero()) continue;
          Scalar wav = t.weight * av;
          for (int rb = 0; rb < dim1; ++rb)
            for (int cb = 0; cb < dim1; ++cb) {
              const Scalar& bv = hb.at(rb, cb);
              if (bv.is_zero()) continue;
              lhs.at(r * dim + c, rb * dim1 + cb) += wav * bv;
            }
        }
    }
    for (const auto& t : tm.terms) {
      for (int r = 0; r < dim1; ++r)
        for (int c = 0; c < dim1; ++c) {
          const Scalar& av = t.a.at(r, c);
          if (av.is_zero()) continue;
          Scalar wav = t.weight * av;
          for (int jn = 0; jn < d; ++jn)
            for (int in = 0; in < d; ++in) {
              const Scalar& cv = sym.C.at(in, jn);  // C^{i_n}_{j_n}
              if (cv.is_zero()) continue;
              Scalar v = wav * cv;
              for (int rb = 0; rb < dim1; ++rb)
                for (int cb = 0; cb < dim1; ++cb) {
                  const Scalar& bv = t.b.at(rb, cb);
                  if (bv.is_zero()) continue;
                  rhs.at((r * d + jn) * dim + c * d + in, rb * dim1 + cb) += v * bv;
                }
            }
        }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_condition_iii(const HeckeSymmetry& sym, int n) {
  const IntegralTensor& tensor = integral_tensor(sym, n);
  int dim = TensorOperator::ipow(sym.d, n);
  std::vector<SMatrix> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(embed(sym.R, i, n, sym.d));
  for (const SMatrix& x : commutant_basis(gens, dim)) {
    SMatrix diff(dim * dim, dim * dim);
    for (const auto& t : tensor.terms)
      diff += t.weight * (kron(t.a, t.b * x) - kron(t.a, x * t.b));
    if (!diff.is_zero()) return false;
  }
  return true;
}

Scalar paired_trace_integral(const HeckeSymmetry& sym, const SMatrix& x, const SMatrix& y, int n) {
  int dim = TensorOperator::ipow(sym.d, n);
  if (x.rows() != dim || y.rows() != dim) throw std::invalid_argument("shape mismatch");
  Scalar out;
  for (int a = 0; a < dim; ++a) {
    MultiIndex ia = decode(a, sym.d, n);
    for (int b = 0; b < dim; ++b) {
      const Scalar& xv = x.at(a, b);
      if (xv.is_zero()) continue;
      MultiIndex ib = decode(b, sym.d, n);
      for (int e = 0; e < dim; ++e) {
        MultiIndex ie = decode(e, sym.d, n);
        int ep = parity_sum(sym.parities, ie);
        for (int f = 0; f < dim; ++f) {
          const Scalar& yv = y.at(e, f);
          if (yv.is_zero()) continue;
          MultiIndex iff = decode(f, sym.d, n);
          // tr(Y Tbar) pairs Y[E,F] with Tbar[F,E] = sgn * T^{F'}_{E'}
          Monomial m{ia, ib, reversed(ie), reversed(iff)};
          Scalar v = integrate_monomial(sym, m);
          if (v.is_zero()) continue;
          int fp = parity_sum(sym.parities, iff);
          if (ep & ((fp + ep) & 1)) v = -v;
          out += xv * yv * v;
        }
      }
    }
  }
  return out;
}

}  // namespace qhaar
