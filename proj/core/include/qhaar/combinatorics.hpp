#pragma once

#include <cstdint>
#include <vector>

#include "qhaar/scalar.hpp"

namespace qhaar {

// Partition as weakly decreasing positive parts; empty = partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= rows()) ? parts[i - 1] : 0;
  }
  Partition conjugate() const;
  bool contains_rectangle(int r, int s) const;  // (s^r), trivially true if r*s == 0

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

struct Cell {
  int row, col;   // 1-based
  int hook;
  int content;    // col - row
};

std::vector<Partition> partitions_of(int n);
std::vector<Cell> hooks_and_contents(const Partition& lambda);
std::int64_t d_lambda(const Partition& lambda);       // hook-length formula
Scalar k_lambda(const Partition& lambda);             // q^{n(lambda)} / prod [h(x)]_q
int n_lambda(const Partition& lambda);                // sum_i lambda_i (i-1)

std::vector<Partition> gamma_set(int r, int s, int n);  // lambda_{r+1} <= s
std::vector<Partition> omega_set(int r, int s, int n);  // gamma members containing (s^r)

// lambda = (s^r) + mu (rows 1..r) with nu' below; requires lambda in omega_set
std::pair<Partition, Partition> rectangle_decompose(const Partition& lambda, int r, int s);

// prod over cells outside the r x s rectangle of q^{r-s}/[c(x)+r-s]_q;
// requires lambda in omega_set(r,s,|lambda|)
Scalar p_lambda(const Partition& lambda, int r, int s);

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // entries 1..n, rows/cols increasing
  int content_of(int m) const;         // col - row of the cell holding m
};

std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

// Permutation of {1..n} by images; w.img[i-1] = w(i).
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation adjacent(int i, int n);          // s_i = (i, i+1)
  static Permutation transposition(int a, int b, int n);

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  Permutation compose(const Permutation& other) const;  // (this o other)(i)
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img < b.img; }
};

int length(const Permutation& w);                    // inversion count
std::vector<int> reduced_word(const Permutation& w); // w = s_{a1} s_{a2} ... s_{al}
std::vector<Permutation> all_permutations(int n);    // lexicographic order

}  // namespace qhaar
