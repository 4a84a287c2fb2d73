#include "crsym/matrix.hpp"

#include <stdexcept>

namespace crsym {

namespace {

void check_same(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix size mismatch");
}

}  // namespace

CMatrix identity_matrix(int m) {
  CMatrix out(m, m);
  for (int i = 0; i < m; ++i) out(i, i) = 1;
  return out;
}

CMatrix unit_matrix(int m, int i, int j, const Gaussian& c) {
  CMatrix out(m, m);
  out(i, j) = c;
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  check_same(a, b);
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  check_same(a, b);
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix size mismatch");
  CMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

CMatrix operator*(const Gaussian& c, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

CMatrix conjugate(const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conj();
  return out;
}

Gaussian trace(const CMatrix& a) {
  Gaussian t;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

bool is_zero(const CMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

std::string matrix_str(const CMatrix& a) {
  std::string out = "[";
  for (int i = 0; i < a.rows(); ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < a.cols(); ++j) out += (j ? ", " : "") + a(i, j).str();
  }
  return out + "]";
}

SparseVec<Rational> real_coords(const CMatrix& a) {
  SparseVec<Rational> v;
  const int m = a.cols();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < m; ++j) {
      const Gaussian& x = a(i, j);
      if (x.re() != 0) v.emplace_back(2 * (i * m + j), x.re());
      if (x.im() != 0) v.emplace_back(2 * (i * m + j) + 1, x.im());
    }
  }
  return v;
}

std::vector<CMatrix> real_solution_basis(int m, const std::function<std::vector<Gaussian>(const CMatrix&)>& cond) {
  const int unknowns = 2 * m * m;
  // Column u of the constraint matrix is cond applied to the u-th real basis matrix.
  std::vector<std::vector<Gaussian>> cols;
  size_t width = 0;
  for (int u = 0; u < unknowns; ++u) {
    int entry = u / 2;
    Gaussian c = u % 2 == 0 ? Gaussian(1) : Gaussian::i();
    cols.push_back(cond(unit_matrix(m, entry / m, entry % m, c)));
    width = std::max(width, cols.back().size());
  }
  std::vector<SparseVec<Rational>> rows(2 * width);
  for (int u = 0; u < unknowns; ++u) {
    const auto& col = cols[static_cast<size_t>(u)];
    for (size_t r = 0; r < col.size(); ++r) {
      if (col[r].re() != 0) rows[2 * r].emplace_back(u, col[r].re());
      if (col[r].im() != 0) rows[2 * r + 1].emplace_back(u, col[r].im());
    }
  }
  std::vector<CMatrix> out;
  for (const auto& x : kernel_of_rows(rows, unknowns)) {
    CMatrix a(m, m);
    for (int u = 0; u < unknowns; ++u) {
      const Rational& v = x[static_cast<size_t>(u)];
      if (v == 0) continue;
      int entry = u / 2;
      a(entry / m, entry % m) += u % 2 == 0 ? Gaussian(v) : Gaussian(Rational(0), v);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<CMatrix> complex_solution_basis(int m, const std::function<std::vector<Gaussian>(const CMatrix&)>& cond) {
  const int unknowns = m * m;
  std::vector<std::vector<Gaussian>> cols;
  size_t width = 0;
  for (int u = 0; u < unknowns; ++u) {
    cols.push_back(cond(unit_matrix(m, u / m, u % m)));
    width = std::max(width, cols.back().size());
  }
  std::vector<SparseVec<Gaussian>> rows(width);
  for (int u = 0; u < unknowns; ++u) {
    const auto& col = cols[static_cast<size_t>(u)];
    for (size_t r = 0; r < col.size(); ++r) {
      if (!col[r].is_zero()) rows[r].emplace_back(u, col[r]);
    }
  }
  std::vector<CMatrix> out;
  for (const auto& x : kernel_of_rows(rows, unknowns)) {
    CMatrix a(m, m);
    for (int u = 0; u < unknowns; ++u) a(u / m, u % m) = x[static_cast<size_t>(u)];
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace crsym
