#pragma once

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "crsym/linalg.hpp"
#include "crsym/matrix.hpp"

namespace crsym {

/// Coordinates of matrix entries: (re, im) pairs for T = Rational, complex
/// entries for T = Gaussian.
template <class T>
SparseVec<T> entry_vector(const CMatrix& m);

inline Gaussian to_gaussian(const Rational& x) { return Gaussian(x); }
inline Gaussian to_gaussian(const Gaussian& x) { return x; }

/// Matrix Lie algebra with a basis of homogeneous elements for the grading
/// by ad(s), s = diag(1, 0, ..., 0, -1), and degrees in [-2, 2]. T = Rational
/// is a real span (real form), T = Gaussian a complex span.
///
/// Basis order: degree -2, -1, 0, 1, 2; this order is the published
/// coordinate convention for subspaces and module vectors.
template <class T>
class GradedAlgebra {
 public:
  using Vec = SparseVec<T>;

  GradedAlgebra() = default;
  /// `blocks[d + 2]` is the basis of degree d.
  GradedAlgebra(int size, const std::array<std::vector<CMatrix>, 5>& blocks);

  int matrix_size() const { return size_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int dim(int deg) const { return end(deg) - begin(deg); }
  int begin(int deg) const { return offset_[static_cast<size_t>(deg + 2)]; }
  int end(int deg) const { return offset_[static_cast<size_t>(deg + 3)]; }
  std::array<int, 5> dims() const;

  const CMatrix& basis(int a) const { return basis_[static_cast<size_t>(a)]; }
  int degree(int a) const;

  CMatrix matrix(const Vec& x) const;
  std::optional<Vec> try_coords(const CMatrix& m) const;
  /// Throws std::invalid_argument if m is not in the algebra.
  Vec coords(const CMatrix& m) const;
  Vec bracket(const Vec& x, const Vec& y) const { return coords(commutator(matrix(x), matrix(y))); }

  /// Local coordinates inside one degree block and back.
  Vec local(const Vec& x, int deg) const;
  Vec global(const Vec& x, int deg) const;

 private:
  int size_ = 0;
  std::vector<CMatrix> basis_;
  std::array<int, 6> offset_{};
  SpanSolver<T> span_;
};

/// su(p', q') with the Hermitian form H = corner antidiagonal ones plus a
/// middle diag(+1 x (p'-1), -1 x (q'-1)), its real contact grading, and the
/// complexification sl(n+2, C) with basis E_ij (i != j) and
/// H_k = E_{k-1,k-1} - E_{k,k}.
struct GradedSU {
  int p = 0;
  int q = 0;
  int n = 0;  // p + q - 2
  CMatrix form;
  GradedAlgebra<Rational> real;
  GradedAlgebra<Gaussian> complex;

  /// s = diag(1, 0, ..., 0, -1).
  CMatrix grading_element() const;
  /// Real structure sigma(X) = -H X^* H (fixes exactly the real form).
  CMatrix sigma(const CMatrix& x) const;
};

GradedSU graded_su(int p, int q);

/// W = Lambda^2 g_{-1}^* (x) g_0 with the tensorial g_0-action
/// (X.Psi)(u,v) = [X,Psi(u,v)] - Psi([X,u],v) - Psi(u,[X,v]).
///
/// Basis element index(p, q, c) for p < q (local indices in g_{-1}) and c
/// (local index in g_0) is e^p ^ e^q (x) f_c, stored at pair(p,q)*dim0 + c
/// with pairs in lexicographic order.
template <class T>
class CurvatureModule {
 public:
  using Vec = SparseVec<T>;

  explicit CurvatureModule(const GradedAlgebra<T>& g);

  const GradedAlgebra<T>& algebra() const { return *g_; }
  int dim() const { return pairs_ * dim0_; }
  int dim_minus1() const { return m_; }
  int dim0() const { return dim0_; }
  int index(int p, int q, int c) const;
  std::tuple<int, int, int> unpack(int i) const;

  /// Action of the g_0 basis element with local index i.
  Vec act(int i, const Vec& w) const;
  /// Action of X given in local g_0 coordinates.
  Vec act(const Vec& x, const Vec& w) const;
  /// Columns of the matrix of the i-th basis element.
  const std::vector<Vec>& action_matrix(int i) const { return action_[static_cast<size_t>(i)]; }
  /// Matrix of ad X on g_{-1} in local coordinates (A_rp = coefficient of
  /// e_r in [X, e_p]).
  const DenseMatrix<T>& ad_minus1(int i) const { return ad1_[static_cast<size_t>(i)]; }

 private:
  const GradedAlgebra<T>* g_;
  int m_ = 0;
  int dim0_ = 0;
  int pairs_ = 0;
  std::vector<int> pair_index_;  // m*m table
  std::vector<std::pair<int, int>> pair_list_;
  std::vector<DenseMatrix<T>> ad1_;
  std::vector<std::vector<Vec>> action_;
};

/// { X in g_0 : X.w = 0 } in local g_0 coordinates.
template <class T>
std::vector<SparseVec<T>> annihilator(const CurvatureModule<T>& M, const SparseVec<T>& w);

/// True if the span of the given g_0 vectors is closed under the bracket.
template <class T>
bool is_subalgebra(const GradedAlgebra<T>& g, const std::vector<SparseVec<T>>& h0);

/// Dimension of the common kernel of the actions of h (local g_0 coords).
/// Throws std::invalid_argument if h is not a subalgebra.
template <class T>
int invariant_subspace(const std::vector<SparseVec<T>>& h, const CurvatureModule<T>& M);

/// sp(m) inside the u(n)-part of g_0 (n = 2m): elements that kill g_{-2}
/// and whose action on g_{-1} = C^n commutes with J(v) = Omega conj(v).
/// Omega must be antisymmetric and unitary; the default is [[0, I], [-I, 0]].
std::vector<SparseVec<Rational>> sp_embedding(int m, const GradedSU& G, const std::optional<CMatrix>& omega = {});

/// Omega' = U Omega U^T for the fixed rational unitary U used as the
/// second, conjugated embedding.
CMatrix conjugated_quaternionic_form(int m);

struct ProlongationResult {
  std::vector<int> dims;        // a_1, a_2, ...
  std::vector<bool> realized;   // a_k realized by ad of a subspace of g_k
  bool truncated = false;       // stopped at an unrealized degree
};

/// Tanaka prolongation of (g_-, a0) up to max_degree; a0 in local g_0
/// coordinates. Throws std::invalid_argument if a0 is not a subalgebra.
template <class T>
ProlongationResult tanaka_prolongation(const GradedAlgebra<T>& g, const std::vector<SparseVec<T>>& a0, int max_degree);

extern template class GradedAlgebra<Rational>;
extern template class GradedAlgebra<Gaussian>;
extern template class CurvatureModule<Rational>;
extern template class CurvatureModule<Gaussian>;

}  // namespace crsym
