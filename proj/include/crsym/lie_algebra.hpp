#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "crsym/linalg.hpp"
#include "crsym/scalar.hpp"

namespace crsym {

using RVec = SparseVec<Rational>;

/// Linear subspace of Q^N given by an independent family of vectors.
struct Subspace {
  int ambient = 0;
  std::vector<RVec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Finite-dimensional real Lie algebra with rational structure constants
/// [e_a, e_b] = sum_c c_ab^c e_c.
class RealLieAlgebra {
 public:
  RealLieAlgebra() = default;
  /// brackets[a][b] holds [e_a, e_b]. Throws std::invalid_argument unless
  /// the table is antisymmetric and satisfies the Jacobi identity.
  RealLieAlgebra(std::vector<std::string> labels, std::vector<std::vector<RVec>> brackets);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RVec& bracket_basis(int a, int b) const { return br_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  Rational constant(int a, int b, int c) const;

  RVec bracket(const RVec& x, const RVec& y) const;
  /// Matrix of ad x (columns are images of basis vectors).
  DenseMatrix<Rational> ad(const RVec& x) const;

  /// Structure constants as (a, b, c, value) with a < b.
  std::vector<std::tuple<int, int, int, Rational>> triples() const;
  /// Parses "a b c value" lines (a < b or a > b; antisymmetry is implied).
  static RealLieAlgebra from_triples(int dim, const std::string& text);
  std::string triples_text() const;

  /// Structure constants of the subalgebra with the given basis (expressed
  /// in that basis); throws std::invalid_argument if it is not closed or
  /// not independent.
  RealLieAlgebra subalgebra(const std::vector<RVec>& basis, std::vector<std::string> labels = {}) const;

  /// Jacobi identity checked over all basis triples.
  bool satisfies_jacobi() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<RVec>> br_;
};

/// Basis vector e_i.
inline RVec unit_vec(int i) { return RVec{{i, Rational(1)}}; }

}  // namespace crsym
