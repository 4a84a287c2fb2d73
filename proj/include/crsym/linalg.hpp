#pragma once

// Exact sparse linear algebra over Q and Q(i).
//
// Vectors are sorted (index, value) lists with no stored zeros. All routines
// are deterministic: pivots are chosen by smallest index, never by size.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crsym/scalar.hpp"

namespace crsym {

template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

template <class T>
using DenseVec = std::vector<T>;

/// y += a * x.
template <class T>
void axpy(SparseVec<T>& y, const T& a, const SparseVec<T>& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec<T> out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      T v = iy->second + a * ix->second;
      if (!is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

template <class T>
void scale(SparseVec<T>& y, const T& a) {
  if (is_zero(a)) {
    y.clear();
    return;
  }
  for (auto& [i, v] : y) v = v * a;
}

template <class T>
T dot(const SparseVec<T>& x, const DenseVec<T>& y) {
  T acc = T(0);
  for (const auto& [i, v] : x) acc += v * y[static_cast<size_t>(i)];
  return acc;
}

template <class T>
SparseVec<T> to_sparse(const DenseVec<T>& v) {
  SparseVec<T> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

template <class T>
DenseVec<T> to_dense(const SparseVec<T>& v, int n) {
  DenseVec<T> out(static_cast<size_t>(n), T(0));
  for (const auto& [i, x] : v) out[static_cast<size_t>(i)] = x;
  return out;
}

/// Accumulates entries into a sparse vector keyed by index; used when
/// contributions arrive in arbitrary order.
template <class T>
class SparseBuilder {
 public:
  void add(int i, const T& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = acc_.try_emplace(i, v);
    if (!inserted) it->second += v;
  }
  SparseVec<T> take() {
    SparseVec<T> out;
    out.reserve(acc_.size());
    for (auto& [i, v] : acc_)
      if (!is_zero(v)) out.emplace_back(i, std::move(v));
    acc_.clear();
    return out;
  }

 private:
  std::map<int, T> acc_;
};

/// Incremental row echelon form. Each stored row is normalized to leading
/// coefficient one; leading indices are pairwise distinct.
template <class T>
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Remainder of v modulo the row space (zero iff v is in the span).
  SparseVec<T> reduce(SparseVec<T> v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      T c = -v.front().second;
      axpy(v, c, it->second);
    }
    return v;
  }

  bool contains(const SparseVec<T>& v) const { return reduce(v).empty(); }

  /// Returns true if the row increased the rank.
  bool insert(SparseVec<T> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    T inv = inverse(v.front().second);
    scale(v, inv);
    int lead = v.front().first;
    rows_.emplace(lead, std::move(v));
    return true;
  }

  /// Basis of { x : r . x = 0 for every stored row r }, one vector per free
  /// column, in increasing free-column order.
  std::vector<DenseVec<T>> kernel() const {
    std::map<int, SparseVec<T>> full = reduced_rows();
    std::vector<DenseVec<T>> out;
    for (int f = 0; f < ncols_; ++f) {
      if (full.count(f)) continue;
      DenseVec<T> x(static_cast<size_t>(ncols_), T(0));
      x[static_cast<size_t>(f)] = T(1);
      for (const auto& [p, row] : full) {
        auto it = std::lower_bound(row.begin(), row.end(), f,
                                   [](const auto& e, int k) { return e.first < k; });
        if (it != row.end() && it->first == f) x[static_cast<size_t>(p)] = -it->second;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  /// Fully reduced rows keyed by pivot column.
  std::map<int, SparseVec<T>> reduced_rows() const {
    std::map<int, SparseVec<T>> full = rows_;
    for (auto it = full.rbegin(); it != full.rend(); ++it) {
      SparseVec<T>& row = it->second;
      // Eliminate every later pivot column from this row.
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t k = 1; k < row.size(); ++k) {
          auto pit = full.find(row[k].first);
          if (pit != full.end()) {
            T c = -row[k].second;
            axpy(row, c, pit->second);
            changed = true;
            break;
          }
        }
      }
    }
    return full;
  }

  const std::map<int, SparseVec<T>>& rows() const { return rows_; }

 private:
  int ncols_;
  std::map<int, SparseVec<T>> rows_;
};

/// Kernel of the matrix with the given sparse rows.
///
/// Rows are inserted until the rank stalls; the candidate kernel is then
/// checked against every remaining row and any violated row is inserted.
/// The result is exact: the returned basis spans the kernel of all rows.
template <class T>
std::vector<DenseVec<T>> kernel_of_rows(const std::vector<SparseVec<T>>& rows, int ncols) {
  Echelon<T> ech(ncols);
  size_t next = 0;
  const int stall_limit = 32;
  while (true) {
    int stall = 0;
    while (next < rows.size() && stall < stall_limit && ech.rank() < ncols) {
      if (ech.insert(rows[next++])) {
        stall = 0;
      } else {
        ++stall;
      }
    }
    std::vector<DenseVec<T>> ker = ech.kernel();
    if (ker.empty()) return ker;
    bool violated = false;
    for (size_t r = next; r < rows.size(); ++r) {
      for (const auto& x : ker) {
        if (!is_zero(dot(rows[r], x))) {
          ech.insert(rows[r]);
          violated = true;
          break;
        }
      }
    }
    if (!violated) return ker;
  }
}

/// Rows of the matrix whose columns are given (column j = cols[j]).
template <class T>
std::vector<SparseVec<T>> rows_from_columns(const std::vector<SparseVec<T>>& cols) {
  std::map<int, SparseVec<T>> rows;
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, v] : cols[j]) rows[r].emplace_back(static_cast<int>(j), v);
  }
  std::vector<SparseVec<T>> out;
  out.reserve(rows.size());
  for (auto& [r, row] : rows) out.push_back(std::move(row));
  return out;
}

/// Kernel of the matrix with the given columns.
template <class T>
std::vector<DenseVec<T>> kernel_of_columns(const std::vector<SparseVec<T>>& cols) {
  return kernel_of_rows(rows_from_columns(cols), static_cast<int>(cols.size()));
}

/// Coordinates with respect to a fixed independent family of vectors.
template <class T>
class SpanSolver {
 public:
  SpanSolver() = default;

  /// Throws std::invalid_argument naming the first dependent vector.
  explicit SpanSolver(const std::vector<SparseVec<T>>& basis) : size_(static_cast<int>(basis.size())) {
    for (int i = 0; i < size_; ++i) {
      SparseVec<T> combo{{i, T(1)}};
      SparseVec<T> v = basis[static_cast<size_t>(i)];
      reduce_tracked(v, combo);
      if (v.empty()) {
        throw std::invalid_argument("basis vector " + std::to_string(i) +
                                    " is a combination of earlier ones");
      }
      T inv = inverse(v.front().second);
      scale(v, inv);
      scale(combo, inv);
      int lead = v.front().first;
      rows_.emplace(lead, Row{std::move(v), std::move(combo)});
    }
  }

  int size() const { return size_; }

  std::optional<DenseVec<T>> coords(SparseVec<T> v) const {
    SparseVec<T> combo;
    reduce_tracked(v, combo);
    if (!v.empty()) return std::nullopt;
    // v = sum c_p row_p and we accumulated -sum c_p combo_p.
    DenseVec<T> out(static_cast<size_t>(size_), T(0));
    for (const auto& [i, c] : combo) out[static_cast<size_t>(i)] = -c;
    return out;
  }

  bool contains(SparseVec<T> v) const {
    SparseVec<T> combo;
    reduce_tracked(v, combo);
    return v.empty();
  }

 private:
  struct Row {
    SparseVec<T> vec;
    SparseVec<T> combo;
  };

  void reduce_tracked(SparseVec<T>& v, SparseVec<T>& combo) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      T c = -v.front().second;
      axpy(v, c, it->second.vec);
      axpy(combo, c, it->second.combo);
    }
  }

  int size_ = 0;
  std::map<int, Row> rows_;
};

/// Rank of a family of vectors.
template <class T>
int rank_of(const std::vector<SparseVec<T>>& vecs, int ncols) {
  Echelon<T> e(ncols);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

/// Echelon basis of the span of a family (independent, deterministic).
template <class T>
std::vector<SparseVec<T>> span_basis(const std::vector<SparseVec<T>>& vecs, int ncols) {
  Echelon<T> e(ncols);
  for (const auto& v : vecs) e.insert(v);
  std::vector<SparseVec<T>> out;
  for (auto& [p, row] : e.reduced_rows()) out.push_back(row);
  return out;
}

/// Dense square matrix used for forms and small transformations.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), T(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
  }
};

/// Signature of a symmetric (T = Rational) or Hermitian (T = Gaussian)
/// matrix by congruence diagonalization M -> P^* M P.
template <class T>
Signature congruence_signature(DenseMatrix<T> m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("signature of a non-square matrix");
  Signature sig;
  std::vector<char> done(static_cast<size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int k = 0; k < n && piv < 0; ++k)
      if (!done[static_cast<size_t>(k)] && !is_zero(m(k, k))) piv = k;
    if (piv < 0) {
      // All remaining diagonal entries vanish; create one from an
      // off-diagonal entry via e_j -> e_j + conj(m_jk) e_k.
      int pj = -1, pk = -1;
      for (int j = 0; j < n && pj < 0; ++j) {
        if (done[static_cast<size_t>(j)]) continue;
        for (int k = 0; k < n; ++k)
          if (k != j && !done[static_cast<size_t>(k)] && !is_zero(m(j, k))) {
            pj = j;
            pk = k;
            break;
          }
      }
      if (pj < 0) break;  // remaining block is zero
      T t = conj(m(pj, pk));
      // column j += t * column k ; row j += conj(t) * row k
      for (int r = 0; r < n; ++r) m(r, pj) = m(r, pj) + m(r, pk) * t;
      for (int c = 0; c < n; ++c) m(pj, c) = m(pj, c) + conj(t) * m(pk, c);
      piv = pj;
    }
    T d = m(piv, piv);
    for (int j = 0; j < n; ++j) {
      if (j == piv || done[static_cast<size_t>(j)] || is_zero(m(j, piv))) continue;
      T f = m(j, piv) / d;
      for (int c = 0; c < n; ++c) m(j, c) = m(j, c) - f * m(piv, c);
      T fc = conj(f);
      for (int r = 0; r < n; ++r) m(r, j) = m(r, j) - m(r, piv) * fc;
    }
    done[static_cast<size_t>(piv)] = 1;
  }
  for (int k = 0; k < n; ++k) {
    const T& d = m(k, k);
    int s;
    if constexpr (std::is_same_v<T, Gaussian>) {
      s = sgn(d.re());
    } else {
      s = sgn(d);
    }
    if (s > 0) {
      ++sig.pos;
    } else if (s < 0) {
      ++sig.neg;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

}  // namespace crsym
