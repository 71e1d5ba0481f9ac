#include "qhaar/hecke.hpp"

#include <algorithm>

#include "qhaar/detail/sym_cache.hpp"

namespace qhaar {

HeckeElement HeckeElement::one(int n) {
  HeckeElement e(n);
  e.add_term(Permutation::identity(n), 1);
  return e;
}

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement e(w.size());
  e.add_term(w, 1);
  return e;
}

Scalar HeckeElement::coeff(const Permutation& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? Scalar{} : it->second;
}

void HeckeElement::add_term(const Permutation& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out = a;
  for (const auto& [w, c] : b.coords_) out.add_term(w, c);
  return out;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out = a;
  for (const auto& [w, c] : b.coords_) out.add_term(w, -c);
  return out;
}

HeckeElement operator*(const Scalar& c, const HeckeElement& a) {
  HeckeElement out(a.degree());
  if (c.is_zero()) return out;
  for (const auto& [w, v] : a.coords_) out.add_term(w, c * v);
  return out;
}

HeckeElement left_mul_gen(int i, const HeckeElement& x) {
  int n = x.degree();
  Permutation si = Permutation::adjacent(i, n);
  Scalar q = Scalar::q_pow(1);
  HeckeElement out(n);
  for (const auto& [w, c] : x.coords()) {
    Permutation siw = si.compose(w);
    if (length(siw) > length(w)) {
      out.add_term(siw, c);
    } else {
      out.add_term(w, (q - Scalar(1)) * c);
      out.add_term(siw, q * c);
    }
  }
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  HeckeElement out(a.degree());
  for (const auto& [u, cu] : a.coords_) {
    HeckeElement t = b;
    std::vector<int> word = reduced_word(u);
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = left_mul_gen(*it, t);
    for (const auto& [w, c] : t.coords_) out.add_term(w, cu * c);
  }
  return out;
}

Scalar tau(const HeckeElement& x) { return x.coeff(Permutation::identity(x.degree())); }

HeckeElement murphy(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("murphy index out of range");
  HeckeElement out(n);
  for (int i = 1; i <= m - 1; ++i)
    out.add_term(Permutation::transposition(m - i, m, n), Scalar::q_pow(-i));
  return out;
}

HeckeElement dipper_james_idempotent(const StandardTableau& t) {
  int n = t.shape.weight();
  HeckeElement e = HeckeElement::one(n);
  for (int m = 1; m <= n; ++m) {
    int cm = t.content_of(m);
    HeckeElement lm = murphy(n, m);
    for (int k = -(m - 1); k <= m - 1; ++k) {
      if (k == cm) continue;
      Scalar den = q_int(cm) - q_int(k);
      HeckeElement factor = lm - (q_int(k) * HeckeElement::one(n));
      e = e * (den.inverse() * factor);
    }
  }
  return e;
}

HeckeElement central_idempotent(const Partition& lambda) {
  int n = lambda.weight();
  HeckeElement out(n);
  for (const auto& t : standard_tableaux(lambda)) out = out + dipper_james_idempotent(t);
  return out;
}

HeckeElement symmetrizer(int n) {
  HeckeElement out(n);
  Scalar norm = q_factorial(n).inverse();
  for (const auto& w : all_permutations(n)) out.add_term(w, norm);
  return out;
}

HeckeElement antisymmetrizer(int n) {
  // [k]_{1/q} = (q^{-k} - 1)/(q^{-1} - 1)
  Scalar fact = 1;
  for (int k = 1; k <= n; ++k) {
    fact *= Scalar::fraction(LaurentPoly::monomial(1, -2 * k) - LaurentPoly::one(),
                             LaurentPoly::monomial(1, -2) - LaurentPoly::one());
  }
  Scalar norm = fact.inverse();
  HeckeElement out(n);
  for (const auto& w : all_permutations(n)) {
    int l = length(w);
    Scalar c = Scalar::q_pow(-l) * norm;
    if (l & 1) c = -c;
    out.add_term(w, c);
  }
  return out;
}

HeckeElement h_map(const HeckeElement& x, const Scalar& trace_c) {
  int n = x.degree();
  if (n < 1) throw std::invalid_argument("h_map needs degree >= 1");
  HeckeElement out(n - 1);
  for (const auto& [w, c] : x.coords()) {
    int k = w(n);
    if (k == n) {
      Permutation w1(std::vector<int>(w.img.begin(), w.img.end() - 1));
      out.add_term(w1, trace_c * c);
      continue;
    }
    // w = (s_k s_{k+1} ... s_{n-1}) w1 with w1(n) = n; drop the last prefix letter
    Permutation cyc = Permutation::identity(n);
    for (int i = k; i <= n - 1; ++i) cyc = cyc.compose(Permutation::adjacent(i, n));
    Permutation w1 = cyc.inverse().compose(w);
    HeckeElement term = HeckeElement::basis(
        Permutation(std::vector<int>(w1.img.begin(), w1.img.end() - 1)));
    for (int i = n - 2; i >= k; --i) term = left_mul_gen(i, term);
    for (const auto& [v, cv] : term.coords()) out.add_term(v, c * cv);
  }
  return out;
}

Rep::Rep(const HeckeSymmetry& sym, int n) : n_(n) {
  dim_ = 1;
  for (int i = 0; i < n; ++i) dim_ *= sym.d;
  std::vector<SMatrix> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(embed(sym.R, i, n, sym.d));
  // build R_w by length, peeling a descent on the right: R_w = R_{w s_i} R_i
  std::vector<Permutation> perms = all_permutations(n);
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) { return length(a) < length(b); });
  for (const auto& w : perms) {
    if (length(w) == 0) {
      rw_.emplace(w, SMatrix::identity(dim_));
      continue;
    }
    int i = 0;
    for (int j = 1; j <= n - 1; ++j) {
      if (w(j) > w(j + 1)) {
        i = j;
        break;
      }
    }
    Permutation wsi = w.compose(Permutation::adjacent(i, n));
    rw_.emplace(w, rw_.at(wsi) * gens[i - 1]);
  }
}

const SMatrix& Rep::r_w(const Permutation& w) const { return rw_.at(w); }

SMatrix Rep::rho(const HeckeElement& x) const {
  SMatrix out(dim_, dim_);
  for (const auto& [w, c] : x.coords()) out += c * rw_.at(w);
  return out;
}

const Rep& Rep::get(const HeckeSymmetry& sym, int n) {
  SymmetryCache& cache = detail::cache_of(sym);
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.reps.find(n);
  if (it == cache.reps.end()) it = cache.reps.emplace(n, std::make_shared<Rep>(sym, n)).first;
  return *it->second;
}

HeckeTensor casimir(int n) {
  HeckeTensor out;
  for (const auto& w : all_permutations(n))
    out[{w.inverse(), w}] = Scalar::q_pow(-length(w));
  return out;
}

namespace {

void tensor_add(HeckeTensor& t, const Permutation& u, const Permutation& v, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace({u, v}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

bool casimir_intertwines(int n) {
  for (int i = 1; i <= n - 1; ++i) {
    HeckeTensor lhs, rhs;
    for (const auto& w : all_permutations(n)) {
      Scalar wt = Scalar::q_pow(-length(w));
      HeckeElement left = left_mul_gen(i, HeckeElement::basis(w.inverse()));
      for (const auto& [u, c] : left.coords()) tensor_add(lhs, u, w, wt * c);
      HeckeElement right = HeckeElement::basis(w) * HeckeElement::basis(Permutation::adjacent(i, n));
      for (const auto& [v, c] : right.coords()) tensor_add(rhs, w.inverse(), v, wt * c);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_trace_expansion(const HeckeSymmetry& sym, int n) {
  if (n < 2) throw std::invalid_argument("trace expansion needs degree >= 2");
  Scalar trace_c = sym.C.trace();
  // abstract, in H_n (x) H_{n-1} coordinates
  HeckeTensor lhs, rhs;
  for (const auto& w : all_permutations(n)) {
    Scalar wt = Scalar::q_pow(-length(w));
    HeckeElement h = h_map(HeckeElement::basis(w), trace_c);
    for (const auto& [u, c] : h.coords()) tensor_add(lhs, w.inverse(), u, wt * c);
  }
  HeckeElement factor = murphy(n, n) + trace_c * HeckeElement::one(n);
  for (const auto& u : all_permutations(n - 1)) {
    Scalar wt = Scalar::q_pow(-length(u));
    std::vector<int> img(u.img);
    img.push_back(n);
    HeckeElement prod = factor * HeckeElement::basis(Permutation(img).inverse());
    for (const auto& [v, c] : prod.coords()) tensor_add(rhs, v, u, wt * c);
  }
  if (lhs != rhs) return false;
  // represented, as operators on V^{(x)n} (x) V^{(x)(n-1)}
  const Rep& rep_n = Rep::get(sym, n);
  const Rep& rep_m = Rep::get(sym, n - 1);
  SMatrix left(rep_n.dim() * rep_m.dim(), rep_n.dim() * rep_m.dim());
  SMatrix right = left;
  for (const auto& [uv, c] : lhs)
    left += c * kron(rep_n.r_w(uv.first), rep_m.r_w(uv.second));
  for (const auto& [uv, c] : rhs)
    right += c * kron(rep_n.r_w(uv.first), rep_m.r_w(uv.second));
  return left == right;
}

}  // namespace qhaar
