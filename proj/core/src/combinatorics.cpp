#include "qhaar/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhaar {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int x : parts) w += x;
  return w;
}

Partition Partition::conjugate() const {
  Partition out;
  if (parts.empty()) return out;
  for (int j = 1; j <= parts[0]; ++j) {
    int cnt = 0;
    for (int x : parts)
      if (x >= j) ++cnt;
    out.parts.push_back(cnt);
  }
  return out;
}

bool Partition::contains_rectangle(int r, int s) const {
  if (r == 0 || s == 0) return true;
  return rows() >= r && parts[r - 1] >= s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.emplace_back();
      out.back().parts = cur;
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n > 0 ? n : 1);
  if (n == 0) out.assign(1, Partition{});
  return out;
}

std::vector<Cell> hooks_and_contents(const Partition& lambda) {
  std::vector<Cell> out;
  Partition conj = lambda.conjugate();
  for (int i = 1; i <= lambda.rows(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      Cell c;
      c.row = i;
      c.col = j;
      c.hook = lambda.part(i) + conj.part(j) - i - j + 1;
      c.content = j - i;
      out.push_back(c);
    }
  }
  return out;
}

std::int64_t d_lambda(const Partition& lambda) {
  int n = lambda.weight();
  Integer fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  Integer hooks = 1;
  for (const Cell& c : hooks_and_contents(lambda)) hooks *= c.hook;
  Integer d = fact / hooks;
  return std::stoll(d.get_str());
}

int n_lambda(const Partition& lambda) {
  int out = 0;
  for (int i = 1; i <= lambda.rows(); ++i) out += lambda.part(i) * (i - 1);
  return out;
}

Scalar k_lambda(const Partition& lambda) {
  Scalar out = Scalar::q_pow(n_lambda(lambda));
  for (const Cell& c : hooks_and_contents(lambda)) out /= q_int(c.hook);
  return out;
}

std::vector<Partition> gamma_set(int r, int s, int n) {
  std::vector<Partition> out;
  for (auto& lam : partitions_of(n))
    if (lam.part(r + 1) <= s) out.push_back(lam);
  return out;
}

std::vector<Partition> omega_set(int r, int s, int n) {
  std::vector<Partition> out;
  for (auto& lam : gamma_set(r, s, n))
    if (lam.contains_rectangle(r, s)) out.push_back(lam);
  return out;
}

std::pair<Partition, Partition> rectangle_decompose(const Partition& lambda, int r, int s) {
  if (!lambda.contains_rectangle(r, s))
    throw std::invalid_argument("partition does not contain the rectangle");
  Partition mu, nu_conj;
  for (int i = 1; i <= std::min(r, lambda.rows()); ++i)
    if (lambda.part(i) - s > 0) mu.parts.push_back(lambda.part(i) - s);
  for (int i = r + 1; i <= lambda.rows(); ++i) nu_conj.parts.push_back(lambda.part(i));
  return {mu, nu_conj.conjugate()};
}

Scalar p_lambda(const Partition& lambda, int r, int s) {
  Scalar out = 1;
  for (const Cell& c : hooks_and_contents(lambda)) {
    if (c.row <= r && c.col <= s) continue;
    Scalar den = q_int(c.content + r - s);
    if (den.is_zero())
      throw std::domain_error("p_lambda denominator vanishes; partition outside the hook");
    out *= Scalar::q_pow(r - s) / den;
  }
  return out;
}

int StandardTableau::content_of(int m) const {
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
      if (rows[i][j] == m) return (j + 1) - (i + 1);
  throw std::out_of_range("entry not in tableau");
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  int n = lambda.weight();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> fill(lambda.rows());
  std::vector<int> counts(lambda.rows(), 0);
  auto rec = [&](auto&& self, int m) -> void {
    if (m > n) {
      StandardTableau t;
      t.shape = lambda;
      t.rows = fill;
      out.push_back(std::move(t));
      return;
    }
    for (int i = 0; i < lambda.rows(); ++i) {
      if (counts[i] < lambda.part(i + 1) && (i == 0 || counts[i - 1] > counts[i])) {
        fill[i].push_back(m);
        ++counts[i];
        self(self, m + 1);
        fill[i].pop_back();
        --counts[i];
      }
    }
  };
  rec(rec, 1);
  return out;
}

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
  std::vector<bool> seen(img.size(), false);
  for (int v : img) {
    if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation w;
  w.img.resize(n);
  for (int i = 0; i < n; ++i) w.img[i] = i + 1;
  return w;
}

Permutation Permutation::adjacent(int i, int n) { return transposition(i, i + 1, n); }

Permutation Permutation::transposition(int a, int b, int n) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("bad transposition");
  Permutation w = identity(n);
  std::swap(w.img[a - 1], w.img[b - 1]);
  return w;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation w;
  w.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) w.img[i] = img[other.img[i] - 1];
  return w;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) w.img[img[i] - 1] = static_cast<int>(i) + 1;
  return w;
}

int length(const Permutation& w) {
  int n = w.size(), out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.img[i] > w.img[j]) ++out;
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> v = w.img;
  std::vector<int> word;
  int n = static_cast<int>(v.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(i + 1);
        changed = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  do {
    Permutation w;
    w.img = v;
    out.push_back(std::move(w));
  } while (std::next_permutation(v.begin(), v.end()));
  if (n == 0) out.assign(1, Permutation{});
  return out;
}

}  // namespace qhaar
