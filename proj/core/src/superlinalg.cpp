#include "qhaar/superlinalg.hpp"

#include <stdexcept>

namespace qhaar {

int encode(const MultiIndex& idx, int d) {
  int code = 0;
  for (int x : idx) code = code * d + (x - 1);
  return code;
}

MultiIndex decode(int code, int d, int n) {
  MultiIndex idx(n);
  for (int k = n - 1; k >= 0; --k) {
    idx[k] = code % d + 1;
    code /= d;
  }
  return idx;
}

MultiIndex reversed(const MultiIndex& idx) { return MultiIndex(idx.rbegin(), idx.rend()); }

int parity_sum(const ParityVector& parities, const MultiIndex& idx) {
  int s = 0;
  for (int x : idx) s += parities[x - 1];
  return s & 1;
}

int sign_factor(const ParityVector& parities, const MultiIndex& I, const MultiIndex& J) {
  if (I.size() != J.size()) throw std::invalid_argument("sign: length mismatch");
  int sum_i = 0, sum_j = 0, expo = 0;
  for (size_t b = 0; b < I.size(); ++b) {
    expo += parities[I[b] - 1] * ((sum_i + sum_j) & 1);
    sum_i += parities[I[b] - 1];
    sum_j += parities[J[b] - 1];
  }
  return (expo & 1) ? -1 : 1;
}

SMatrix::SMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  a_.assign(static_cast<size_t>(rows) * cols, Scalar{});
}

SMatrix SMatrix::identity(int n) {
  SMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool SMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

SMatrix SMatrix::transpose() const {
  SMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar SMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

SMatrix operator+(const SMatrix& a, const SMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  SMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

SMatrix operator-(const SMatrix& a, const SMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  SMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

SMatrix operator*(const SMatrix& a, const SMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  SMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& w = b.at(k, j);
        if (w.is_zero()) continue;
        m.at(i, j) += v * w;
      }
    }
  }
  return m;
}

SMatrix operator*(const Scalar& c, const SMatrix& a) {
  SMatrix m(a.rows_, a.cols_);
  if (c.is_zero()) return m;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (!a.a_[i].is_zero()) m.a_[i] = c * a.a_[i];
  return m;
}

bool operator==(const SMatrix& a, const SMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

SMatrix kron(const SMatrix& a, const SMatrix& b) {
  SMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& v = a.at(i, j);
      if (v.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          const Scalar& w = b.at(k, l);
          if (w.is_zero()) continue;
          m.at(i * b.rows() + k, j * b.cols() + l) = v * w;
        }
      }
    }
  }
  return m;
}

SMatrix embed(const SMatrix& r_matrix, int i, int n, int d) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("embed position out of range");
  if (r_matrix.rows() != d * d || r_matrix.cols() != d * d)
    throw std::invalid_argument("embed expects a d^2 x d^2 matrix");
  int left = 1, right = 1;
  for (int k = 0; k < i - 1; ++k) left *= d;
  for (int k = 0; k < n - i - 1; ++k) right *= d;
  return kron(SMatrix::identity(left), kron(r_matrix, SMatrix::identity(right)));
}

bool is_even_operator(const SMatrix& a, const ParityVector& parities, int n) {
  int d = static_cast<int>(parities.size());
  for (int i = 0; i < a.rows(); ++i) {
    int pi = parity_sum(parities, decode(i, d, n));
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      if (pi != parity_sum(parities, decode(j, d, n))) return false;
    }
  }
  return true;
}

SMatrix ctrace_last(const SMatrix& a, const SMatrix& c_matrix, int d, int n) {
  if (n < 1) throw std::invalid_argument("ctrace_last needs degree >= 1");
  int m = a.rows() / d;
  SMatrix out(m, m);
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      Scalar v;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const Scalar& c = c_matrix.at(i, j);
          if (c.is_zero()) continue;
          const Scalar& x = a.at(row * d + j, col * d + i);
          if (x.is_zero()) continue;
          v += c * x;
        }
      }
      out.at(row, col) = std::move(v);
    }
  }
  return out;
}

namespace {

// row echelon over the scalar field; returns rank, optionally tracks a companion
int gauss(std::vector<std::vector<Scalar>>& m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    Scalar inv = m[rk][col].inverse();
    for (int c = col; c < cols; ++c)
      if (!m[rk][c].is_zero()) m[rk][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rk || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = col; c < cols; ++c)
        if (!m[rk][c].is_zero()) m[r][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

}  // namespace

int rank(const SMatrix& a) {
  std::vector<std::vector<Scalar>> m(a.rows(), std::vector<Scalar>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  return gauss(m);
}

std::optional<SMatrix> inverse(const SMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    m[i][n + i] = 1;
  }
  // eliminate over the left block only; a missing pivot there means singular
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    Scalar inv = m[col][col].inverse();
    for (int c = col; c < 2 * n; ++c)
      if (!m[col][c].is_zero()) m[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = col; c < 2 * n; ++c)
        if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
    }
  }
  SMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = m[i][n + j];
  return out;
}

std::vector<SMatrix> commutant_basis(const std::vector<SMatrix>& generators, int dim) {
  // unknown X (dim x dim) with X G - G X = 0 for each generator
  int ncols = dim * dim;
  std::vector<std::vector<Scalar>> rows;
  for (const SMatrix& g : generators) {
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        std::vector<Scalar> row(ncols);
        bool nz = false;
        for (int k = 0; k < dim; ++k) {
          if (!g.at(k, b).is_zero()) {
            row[a * dim + k] += g.at(k, b);
            nz = true;
          }
          if (!g.at(a, k).is_zero()) {
            row[k * dim + b] -= g.at(a, k);
            nz = true;
          }
        }
        if (nz) rows.push_back(std::move(row));
      }
    }
  }
  // nullspace
  int rk = gauss(rows);
  std::vector<int> pivcol;
  std::vector<bool> is_piv(ncols, false);
  {
    int r = 0;
    for (int c = 0; c < ncols && r < rk; ++c) {
      if (!rows[r][c].is_zero()) {
        pivcol.push_back(c);
        is_piv[c] = true;
        ++r;
      }
    }
  }
  std::vector<SMatrix> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_piv[fc]) continue;
    SMatrix x(dim, dim);
    x.at(fc / dim, fc % dim) = 1;
    for (int r = 0; r < rk; ++r) {
      if (!rows[r][fc].is_zero()) {
        int pc = pivcol[r];
        x.at(pc / dim, pc % dim) = -rows[r][fc];
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace qhaar
