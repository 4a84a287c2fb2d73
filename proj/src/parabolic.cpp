#include "crsym/parabolic.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>

namespace crsym {

template <>
SparseVec<Rational> entry_vector<Rational>(const CMatrix& m) {
  return real_coords(m);
}

template <>
SparseVec<Gaussian> entry_vector<Gaussian>(const CMatrix& m) {
  SparseVec<Gaussian> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) v.emplace_back(i * m.cols() + j, m(i, j));
  return v;
}

namespace {

template <class T>
CMatrix combine(const std::vector<CMatrix>& mats, const SparseVec<T>& x, int size) {
  CMatrix out(size, size);
  for (const auto& [i, c] : x) out = out + to_gaussian(c) * mats[static_cast<size_t>(i)];
  return out;
}

template <class T>
CMatrix combine(const std::vector<CMatrix>& mats, const DenseVec<T>& x, int size) {
  CMatrix out(size, size);
  for (size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out = out + to_gaussian(x[i]) * mats[i];
  return out;
}

// Appends v, shifted by offset, to the columns builder.
template <class T>
void append(SparseVec<T>& col, const SparseVec<T>& v, int offset) {
  for (const auto& [i, x] : v) col.emplace_back(i + offset, x);
}

int grade(int i, int d) { return i == 0 ? 1 : (i == d - 1 ? -1 : 0); }

}  // namespace

// ---------------------------------------------------------------------------

template <class T>
GradedAlgebra<T>::GradedAlgebra(int size, const std::array<std::vector<CMatrix>, 5>& blocks) : size_(size) {
  offset_[0] = 0;
  for (size_t d = 0; d < 5; ++d) {
    for (const auto& b : blocks[d]) {
      if (b.rows() != size || b.cols() != size) throw std::invalid_argument("basis matrix has the wrong size");
      basis_.push_back(b);
    }
    offset_[d + 1] = static_cast<int>(basis_.size());
  }
  std::vector<Vec> vecs;
  for (const auto& b : basis_) vecs.push_back(entry_vector<T>(b));
  span_ = SpanSolver<T>(vecs);
}

template <class T>
std::array<int, 5> GradedAlgebra<T>::dims() const {
  std::array<int, 5> out{};
  for (int d = -2; d <= 2; ++d) out[static_cast<size_t>(d + 2)] = dim(d);
  return out;
}

template <class T>
int GradedAlgebra<T>::degree(int a) const {
  for (int d = -2; d <= 2; ++d)
    if (a >= begin(d) && a < end(d)) return d;
  throw std::out_of_range("basis index out of range");
}

template <class T>
CMatrix GradedAlgebra<T>::matrix(const Vec& x) const {
  return combine(basis_, x, size_);
}

template <class T>
std::optional<SparseVec<T>> GradedAlgebra<T>::try_coords(const CMatrix& m) const {
  auto c = span_.coords(entry_vector<T>(m));
  if (!c) return std::nullopt;
  return to_sparse(*c);
}

template <class T>
SparseVec<T> GradedAlgebra<T>::coords(const CMatrix& m) const {
  auto c = try_coords(m);
  if (!c) throw std::invalid_argument("matrix is not in the algebra: " + matrix_str(m));
  return *c;
}

template <class T>
SparseVec<T> GradedAlgebra<T>::local(const Vec& x, int deg) const {
  Vec out;
  for (const auto& [i, v] : x) {
    if (i < begin(deg) || i >= end(deg)) throw std::invalid_argument("vector is not homogeneous of degree " + std::to_string(deg));
    out.emplace_back(i - begin(deg), v);
  }
  return out;
}

template <class T>
SparseVec<T> GradedAlgebra<T>::global(const Vec& x, int deg) const {
  Vec out;
  for (const auto& [i, v] : x) {
    if (i < 0 || i >= dim(deg)) throw std::invalid_argument("local index out of range");
    out.emplace_back(i + begin(deg), v);
  }
  return out;
}

// ---------------------------------------------------------------------------

CMatrix GradedSU::grading_element() const {
  const int d = n + 2;
  CMatrix s(d, d);
  s(0, 0) = 1;
  s(d - 1, d - 1) = -1;
  return s;
}

CMatrix GradedSU::sigma(const CMatrix& x) const { return Gaussian(-1) * (form * adjoint(x) * form); }

GradedSU graded_su(int p, int q) {
  if (p < 1 || q < 1 || p + q < 3) throw std::invalid_argument("su(p,q) grading needs p, q >= 1 and p + q >= 3");
  GradedSU G;
  G.p = p;
  G.q = q;
  G.n = p + q - 2;
  const int d = p + q;
  CMatrix h(d, d);
  h(0, d - 1) = 1;
  h(d - 1, 0) = 1;
  for (int k = 1; k < d - 1; ++k) h(k, k) = k <= p - 1 ? 1 : -1;
  G.form = h;

  std::array<std::vector<CMatrix>, 5> real, cplx;
  for (int deg = -2; deg <= 2; ++deg) {
    real[static_cast<size_t>(deg + 2)] = real_solution_basis(d, [&](const CMatrix& x) {
      CMatrix c = adjoint(x) * h + h * x;
      std::vector<Gaussian> out;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          out.push_back(c(i, j));
          out.push_back(grade(i, d) - grade(j, d) == deg ? Gaussian(0) : x(i, j));
        }
      }
      out.push_back(trace(x));
      return out;
    });
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) cplx[static_cast<size_t>(grade(i, d) - grade(j, d) + 2)].push_back(unit_matrix(d, i, j));
  for (int k = 1; k < d; ++k) cplx[2].push_back(unit_matrix(d, k - 1, k - 1) - unit_matrix(d, k, k));
  G.real = GradedAlgebra<Rational>(d, real);
  G.complex = GradedAlgebra<Gaussian>(d, cplx);
  return G;
}

// ---------------------------------------------------------------------------

template <class T>
CurvatureModule<T>::CurvatureModule(const GradedAlgebra<T>& g)
    : g_(&g), m_(g.dim(-1)), dim0_(g.dim(0)) {
  pair_index_.assign(static_cast<size_t>(m_ * m_), -1);
  for (int p = 0; p < m_; ++p) {
    for (int q = p + 1; q < m_; ++q) {
      pair_index_[static_cast<size_t>(p * m_ + q)] = static_cast<int>(pair_list_.size());
      pair_list_.emplace_back(p, q);
    }
  }
  pairs_ = static_cast<int>(pair_list_.size());

  std::vector<DenseMatrix<T>> ad0;
  for (int i = 0; i < dim0_; ++i) {
    const CMatrix& x = g.basis(g.begin(0) + i);
    DenseMatrix<T> a(m_, m_), b(dim0_, dim0_);
    for (int p = 0; p < m_; ++p)
      for (const auto& [r, v] : g.local(g.coords(commutator(x, g.basis(g.begin(-1) + p))), -1)) a(r, p) = v;
    for (int c = 0; c < dim0_; ++c)
      for (const auto& [r, v] : g.local(g.coords(commutator(x, g.basis(g.begin(0) + c))), 0)) b(r, c) = v;
    ad1_.push_back(std::move(a));
    ad0.push_back(std::move(b));
  }

  for (int i = 0; i < dim0_; ++i) {
    const DenseMatrix<T>& A = ad1_[static_cast<size_t>(i)];
    const DenseMatrix<T>& B = ad0[static_cast<size_t>(i)];
    std::vector<Vec> cols;
    cols.reserve(static_cast<size_t>(dim()));
    for (int w = 0; w < dim(); ++w) {
      auto [p, q, c] = unpack(w);
      SparseBuilder<T> col;
      auto add = [&](int a, int b, int cc, const T& coef) {
        if (a == b || is_zero(coef)) return;
        if (a < b) col.add(index(a, b, cc), coef);
        else col.add(index(b, a, cc), -coef);
      };
      for (int r = 0; r < m_; ++r) {
        add(r, q, c, -A(p, r));
        add(p, r, c, -A(q, r));
      }
      for (int e = 0; e < dim0_; ++e) add(p, q, e, B(e, c));
      cols.push_back(col.take());
    }
    action_.push_back(std::move(cols));
  }
}

template <class T>
int CurvatureModule<T>::index(int p, int q, int c) const {
  if (p < 0 || q < 0 || p >= m_ || q >= m_ || p >= q || c < 0 || c >= dim0_)
    throw std::out_of_range("module index out of range");
  return pair_index_[static_cast<size_t>(p * m_ + q)] * dim0_ + c;
}

template <class T>
std::tuple<int, int, int> CurvatureModule<T>::unpack(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("module index out of range");
  auto [p, q] = pair_list_[static_cast<size_t>(i / dim0_)];
  return {p, q, i % dim0_};
}

template <class T>
SparseVec<T> CurvatureModule<T>::act(int i, const Vec& w) const {
  Vec out;
  const auto& cols = action_matrix(i);
  for (const auto& [b, v] : w) axpy(out, v, cols[static_cast<size_t>(b)]);
  return out;
}

template <class T>
SparseVec<T> CurvatureModule<T>::act(const Vec& x, const Vec& w) const {
  Vec out;
  for (const auto& [i, c] : x) axpy(out, c, act(i, w));
  return out;
}

// ---------------------------------------------------------------------------

template <class T>
std::vector<SparseVec<T>> annihilator(const CurvatureModule<T>& M, const SparseVec<T>& w) {
  std::vector<SparseVec<T>> cols;
  for (int i = 0; i < M.dim0(); ++i) cols.push_back(M.act(i, w));
  std::vector<SparseVec<T>> out;
  for (const auto& k : kernel_of_columns(cols)) out.push_back(to_sparse(k));
  return out;
}

template <class T>
bool is_subalgebra(const GradedAlgebra<T>& g, const std::vector<SparseVec<T>>& h0) {
  Echelon<T> span(g.dim(0));
  for (const auto& x : h0) span.insert(x);
  for (size_t a = 0; a < h0.size(); ++a) {
    for (size_t b = a + 1; b < h0.size(); ++b) {
      auto br = g.bracket(g.global(h0[a], 0), g.global(h0[b], 0));
      if (!span.reduce(g.local(br, 0)).empty()) return false;
    }
  }
  return true;
}

template <class T>
int invariant_subspace(const std::vector<SparseVec<T>>& h, const CurvatureModule<T>& M) {
  if (!is_subalgebra(M.algebra(), h)) throw std::invalid_argument("generators do not span a subalgebra");
  const int n = M.dim();
  std::vector<SparseVec<T>> rows;
  for (const auto& x : h) {
    std::vector<SparseVec<T>> cols;
    for (int b = 0; b < n; ++b) cols.push_back(M.act(x, SparseVec<T>{{b, T(1)}}));
    for (auto& r : rows_from_columns(cols)) rows.push_back(std::move(r));
  }
  return static_cast<int>(kernel_of_rows(rows, n).size());
}

// ---------------------------------------------------------------------------

namespace {

// Real coordinates (2k + part) of the column Y_{k+1, 0} of a g_{-1} element.
SparseVec<Rational> column_coords(const CMatrix& y, int n) {
  SparseVec<Rational> v;
  for (int k = 0; k < n; ++k) {
    const Gaussian& c = y(k + 1, 0);
    if (c.re() != 0) v.emplace_back(2 * k, c.re());
    if (c.im() != 0) v.emplace_back(2 * k + 1, c.im());
  }
  return v;
}

CMatrix quaternionic_form(int m) {
  CMatrix om(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    om(i, m + i) = 1;
    om(m + i, i) = -1;
  }
  return om;
}

}  // namespace

CMatrix conjugated_quaternionic_form(int m) {
  if (m < 1) throw std::invalid_argument("sp(m) needs m >= 1");
  const int n = 2 * m;
  CMatrix d = identity_matrix(n);
  d(1, 1) = Gaussian::i();
  CMatrix r = identity_matrix(n);
  r(0, 0) = Rational(3, 5);
  r(0, n - 1) = Rational(-4, 5);
  r(n - 1, 0) = Rational(4, 5);
  r(n - 1, n - 1) = Rational(3, 5);
  CMatrix u = d * r;
  return u * quaternionic_form(m) * transpose(u);
}

std::vector<SparseVec<Rational>> sp_embedding(int m, const GradedSU& G, const std::optional<CMatrix>& omega) {
  if (m < 1 || G.n != 2 * m) throw std::invalid_argument("sp(m) embedding needs n = 2m");
  const int n = G.n;
  CMatrix om = omega ? *omega : quaternionic_form(m);
  if (om.rows() != n || om.cols() != n) throw std::invalid_argument("Omega has the wrong size");
  if (!is_zero(om + transpose(om)) || !is_zero(om * adjoint(om) - identity_matrix(n)))
    throw std::invalid_argument("Omega must be antisymmetric and unitary");

  const auto& g = G.real;
  const int dm = g.dim(-1);
  std::vector<SparseVec<Rational>> vs;
  for (int p = 0; p < dm; ++p) vs.push_back(column_coords(g.basis(g.begin(-1) + p), n));
  SpanSolver<Rational> cols(vs);
  // J in local g_{-1} coordinates: J(r, p) = coefficient of e_r in J e_p.
  DenseMatrix<Rational> J(dm, dm);
  for (int p = 0; p < dm; ++p) {
    const CMatrix& y = g.basis(g.begin(-1) + p);
    CMatrix v(n, 1);
    for (int k = 0; k < n; ++k) v(k, 0) = y(k + 1, 0).conj();
    CMatrix jv = om * v;
    CMatrix full(n + 2, n + 2);
    for (int k = 0; k < n; ++k) full(k + 1, 0) = jv(k, 0);
    auto c = cols.coords(column_coords(full, n));
    if (!c) throw std::logic_error("g_{-1} columns do not span C^n");
    for (int r = 0; r < dm; ++r) J(r, p) = (*c)[static_cast<size_t>(r)];
  }

  const CMatrix& e2 = g.basis(g.begin(-2));
  std::vector<SparseVec<Rational>> colsys;
  for (int i = 0; i < g.dim(0); ++i) {
    const CMatrix& x = g.basis(g.begin(0) + i);
    DenseMatrix<Rational> A(dm, dm);
    for (int p = 0; p < dm; ++p)
      for (const auto& [r, v] : g.local(g.coords(commutator(x, g.basis(g.begin(-1) + p))), -1)) A(r, p) = v;
    SparseVec<Rational> col;
    for (int r = 0; r < dm; ++r) {
      for (int p = 0; p < dm; ++p) {
        Rational t = 0;
        for (int k = 0; k < dm; ++k) t += A(r, k) * J(k, p) - J(r, k) * A(k, p);
        if (t != 0) col.emplace_back(r * dm + p, t);
      }
    }
    append(col, g.local(g.coords(commutator(x, e2)), -2), dm * dm);
    colsys.push_back(std::move(col));
  }
  std::vector<SparseVec<Rational>> out;
  for (const auto& k : kernel_of_columns(colsys)) out.push_back(to_sparse(k));
  return out;
}

// ---------------------------------------------------------------------------

template <class T>
ProlongationResult tanaka_prolongation(const GradedAlgebra<T>& g, const std::vector<SparseVec<T>>& a0, int max_degree) {
  if (!is_subalgebra(g, a0)) throw std::invalid_argument("a0 is not a subalgebra of g_0");
  const int size = g.matrix_size();
  const int m = g.dim(-1);
  const int ew = std::is_same_v<T, Rational> ? 2 * size * size : size * size;  // entry-vector width

  std::vector<CMatrix> em;  // e_p
  for (int p = 0; p < m; ++p) em.push_back(g.basis(g.begin(-1) + p));
  const CMatrix e2 = g.basis(g.begin(-2));
  std::vector<std::vector<T>> kappa(static_cast<size_t>(m), std::vector<T>(static_cast<size_t>(m), T(0)));
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      auto c = g.local(g.coords(commutator(em[static_cast<size_t>(p)], em[static_cast<size_t>(q)])), -2);
      if (!c.empty()) kappa[static_cast<size_t>(p)][static_cast<size_t>(q)] = c.front().second;
    }
  }

  // levels[k + 2] = realized matrices of a_k.
  std::vector<std::vector<CMatrix>> levels;
  levels.push_back({e2});
  levels.push_back(em);
  {
    std::vector<CMatrix> l0;
    for (const auto& x : span_basis(a0, g.dim(0))) l0.push_back(g.matrix(g.global(x, 0)));
    levels.push_back(std::move(l0));
  }

  ProlongationResult res;
  // Equation blocks: (p, q) for p < q, then p.
  std::vector<int> pair_block(static_cast<size_t>(m * m), -1);
  int blocks = 0;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) pair_block[static_cast<size_t>(p * m + q)] = blocks++;
  const int single_base = blocks;
  blocks += m;

  for (int k = 1; k <= max_degree; ++k) {
    const auto& prev = levels[static_cast<size_t>(k + 1)];
    const auto& prev2 = levels[static_cast<size_t>(k)];
    const int n1 = static_cast<int>(prev.size()), n2 = static_cast<int>(prev2.size());
    if (n1 == 0 && n2 == 0) {
      res.dims.push_back(0);
      res.realized.push_back(true);
      levels.emplace_back();
      continue;
    }
    std::vector<SparseVec<T>> cols;
    for (int p = 0; p < m; ++p) {
      for (int i = 0; i < n1; ++i) {
        const CMatrix& a = prev[static_cast<size_t>(i)];
        SparseVec<T> col;
        for (int q = 0; q < m; ++q) {
          if (q == p) continue;
          if (p < q) {
            CMatrix v = Gaussian(-1) * commutator(a, em[static_cast<size_t>(q)]);
            append(col, entry_vector<T>(v), pair_block[static_cast<size_t>(p * m + q)] * ew);
          } else {
            CMatrix v = Gaussian(-1) * commutator(em[static_cast<size_t>(q)], a);
            append(col, entry_vector<T>(v), pair_block[static_cast<size_t>(q * m + p)] * ew);
          }
        }
        append(col, entry_vector<T>(commutator(a, e2)), (single_base + p) * ew);
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        cols.push_back(std::move(col));
      }
    }
    for (int j = 0; j < n2; ++j) {
      const CMatrix& c = prev2[static_cast<size_t>(j)];
      SparseVec<T> col;
      for (int p = 0; p < m; ++p) {
        for (int q = p + 1; q < m; ++q) {
          const T& kp = kappa[static_cast<size_t>(p)][static_cast<size_t>(q)];
          if (!is_zero(kp)) append(col, entry_vector<T>(to_gaussian(kp) * c), pair_block[static_cast<size_t>(p * m + q)] * ew);
        }
      }
      for (int p = 0; p < m; ++p) append(col, entry_vector<T>(commutator(em[static_cast<size_t>(p)], c)), (single_base + p) * ew);
      cols.push_back(std::move(col));
    }
    auto ker = kernel_of_columns(cols);
    res.dims.push_back(static_cast<int>(ker.size()));
    if (ker.empty()) {
      res.realized.push_back(true);
      levels.emplace_back();
      continue;
    }

    // Realize each f by some x in g_k: ad x = f on g_-.
    const int gk = (k <= 2) ? g.dim(k) : 0;
    std::vector<SparseVec<T>> images;
    for (int a = 0; a < gk; ++a) {
      const CMatrix& x = g.basis(g.begin(k) + a);
      SparseVec<T> v;
      for (int p = 0; p < m; ++p) append(v, entry_vector<T>(commutator(x, em[static_cast<size_t>(p)])), p * ew);
      append(v, entry_vector<T>(commutator(x, e2)), m * ew);
      images.push_back(std::move(v));
    }
    SpanSolver<T> solver(images);
    std::vector<CMatrix> realized;
    bool ok = true;
    for (const auto& f : ker) {
      SparseVec<T> target;
      for (int p = 0; p < m; ++p) {
        DenseVec<T> part(f.begin() + p * n1, f.begin() + (p + 1) * n1);
        append(target, entry_vector<T>(combine(prev, part, size)), p * ew);
      }
      DenseVec<T> part2(f.begin() + m * n1, f.end());
      append(target, entry_vector<T>(combine(prev2, part2, size)), m * ew);
      auto c = solver.coords(target);
      if (!c) {
        ok = false;
        break;
      }
      std::vector<CMatrix> gkb;
      for (int a = 0; a < gk; ++a) gkb.push_back(g.basis(g.begin(k) + a));
      realized.push_back(combine(gkb, *c, size));
    }
    res.realized.push_back(ok);
    if (!ok) {
      res.truncated = true;
      break;
    }
    levels.push_back(std::move(realized));
  }
  return res;
}

// ---------------------------------------------------------------------------

template class GradedAlgebra<Rational>;
template class GradedAlgebra<Gaussian>;
template class CurvatureModule<Rational>;
template class CurvatureModule<Gaussian>;

template std::vector<SparseVec<Rational>> annihilator(const CurvatureModule<Rational>&, const SparseVec<Rational>&);
template std::vector<SparseVec<Gaussian>> annihilator(const CurvatureModule<Gaussian>&, const SparseVec<Gaussian>&);
template bool is_subalgebra(const GradedAlgebra<Rational>&, const std::vector<SparseVec<Rational>>&);
template bool is_subalgebra(const GradedAlgebra<Gaussian>&, const std::vector<SparseVec<Gaussian>>&);
template int invariant_subspace(const std::vector<SparseVec<Rational>>&, const CurvatureModule<Rational>&);
template int invariant_subspace(const std::vector<SparseVec<Gaussian>>&, const CurvatureModule<Gaussian>&);
template ProlongationResult tanaka_prolongation(const GradedAlgebra<Rational>&, const std::vector<SparseVec<Rational>>&, int);
template ProlongationResult tanaka_prolongation(const GradedAlgebra<Gaussian>&, const std::vector<SparseVec<Gaussian>>&, int);

}  // namespace crsym
