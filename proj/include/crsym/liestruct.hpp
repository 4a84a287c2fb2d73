#pragma once

#include <string>
#include <vector>

#include "crsym/lie_algebra.hpp"
#include "crsym/matrix.hpp"

namespace crsym {

struct KillingForm {
  DenseMatrix<Rational> matrix;
  Signature signature;
};

/// K(x,y) = trace(ad x ad y).
KillingForm killing_form(const RealLieAlgebra& L);

/// Span of all brackets [u, v], u in U, v in V.
Subspace bracket_span(const RealLieAlgebra& L, const Subspace& U, const Subspace& V);
Subspace whole(const RealLieAlgebra& L);

/// Dimensions D^0 = S, D^1 = [S,S], ... down to the first repeated value.
std::vector<int> derived_series(const RealLieAlgebra& L, const Subspace& S);
/// Dimensions C^0 = L, C^1 = [L,L], C^{k+1} = [L, C^k], until stable.
std::vector<int> lower_central_series(const RealLieAlgebra& L);
Subspace center(const RealLieAlgebra& L);

/// Smallest k with D^k = 0 (D^1 = [S,S]); -1 if the series stalls above 0.
int derived_length(const std::vector<int>& series);

struct RadicalReport {
  Subspace radical;
  std::vector<int> derived;        // of L
  std::vector<int> lower_central;  // of L
  int center_dim = 0;
  std::vector<int> radical_derived;
  int radical_derived_length = 0;
};

/// Radical as the Killing-orthogonal complement of [L, L].
RadicalReport radical_and_series(const RealLieAlgebra& L);

struct LeviVerdict {
  bool pass = false;
  /// First failing condition: "subalgebra", "semisimple" or "complement".
  std::string failed;
  int dim = 0;
};

/// Checks that the candidate is a semisimple subalgebra complementary to
/// the radical. Throws std::invalid_argument if a vector is not in L.
LeviVerdict levi_check(const RealLieAlgebra& L, const Subspace& candidate);

struct Fingerprint {
  int dim = 0;
  Signature killing;
  int center_dim = 0;
  std::vector<int> derived;
  std::vector<int> lower_central;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.dim == b.dim && a.killing == b.killing && a.center_dim == b.center_dim && a.derived == b.derived &&
           a.lower_central == b.lower_central;
  }
};

Fingerprint fingerprint(const RealLieAlgebra& L);
/// Names of the differing fields; empty on a match.
std::vector<std::string> fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b);

/// Lie algebra spanned (over R) by the given matrices, which must be
/// independent and closed under the commutator.
RealLieAlgebra matrix_lie_algebra(const std::vector<CMatrix>& basis, std::vector<std::string> labels = {});

/// Reference algebras: "su(p,q)", "u(m)", "su(2)+su(m)", "sp(m)".
RealLieAlgebra reference_su(int p, int q);
RealLieAlgebra reference_u(int m);
RealLieAlgebra reference_su2_plus_su(int m);
RealLieAlgebra reference_sp(int m);
/// Parses the names above, e.g. "su(1,3)", "u(4)", "su(2)+su(3)", "sp(2)".
RealLieAlgebra reference_algebra(const std::string& name);

/// Direct sum with the second summand's indices shifted.
RealLieAlgebra direct_sum(const RealLieAlgebra& a, const RealLieAlgebra& b);

}  // namespace crsym
