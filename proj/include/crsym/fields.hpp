#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crsym/hypersurface.hpp"
#include "crsym/liestruct.hpp"
#include "crsym/vector_field.hpp"

namespace crsym {

/// Generator lists of the two submaximal models (and the flat quadric's
/// symmetry algebra is left to the solver). Labels follow the usual names:
/// H_k, T_k, T_k', S_k, S_k', R_s,t, R_s,t'.
FieldBasis builtin_symmetries(Family family, int n, const std::vector<int>& eps = {});

/// Field file: one "label : a1 ; ... ; a(n+1)" per line.
FieldBasis parse_field_file(int n, const std::string& content);

/// Raised when a bracket of two basis fields leaves their real span.
class NotClosed : public std::runtime_error {
 public:
  NotClosed(int a, int b, std::string labels, std::string residual)
      : std::runtime_error("[" + labels + "] is not in the real span (residual " + residual + ")"),
        a_(a),
        b_(b),
        residual_(std::move(residual)) {}
  int a() const { return a_; }
  int b() const { return b_; }
  const std::string& residual() const { return residual_; }

 private:
  int a_;
  int b_;
  std::string residual_;
};

/// Raised when a basis field is a real combination of the earlier ones.
class NotIndependent : public std::runtime_error {
 public:
  NotIndependent(int index, const std::string& label)
      : std::runtime_error("field " + label + " is a real combination of earlier fields"), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Coordinates of holomorphic fields over R: the real and imaginary parts of
/// every (component, monomial) coefficient get their own index.
class RealCoordinates {
 public:
  RVec of(const HoloVectorField& v);
  /// Like of(), but returns nullopt when v uses a coordinate never seen.
  std::optional<RVec> known(const HoloVectorField& v) const;
  int size() const { return static_cast<int>(index_.size()); }

 private:
  std::map<std::tuple<int, Monomial, int>, int> index_;
};

/// Structure constants of the real span of the basis.
RealLieAlgebra close_and_structure(const FieldBasis& basis);

struct SymmetrySolution {
  int degree = 0;
  int dimension = 0;  // over R
  int unknowns = 0;   // real unknowns
  int equations = 0;  // real equations assembled
  int clearing_power = 0;
  std::vector<HoloVectorField> basis;
  /// Real unknowns: column c (even) is the real part of the coefficient of
  /// z^alpha d/dz_j, column c+1 its imaginary part.
  std::map<std::pair<int, Monomial>, int> column_of;
  std::vector<RVec> kernel;

  /// Exact membership of v in the real span of `basis`.
  bool contains(const HoloVectorField& v) const;
};

/// All polynomial infinitesimal symmetries of total degree <= degree.
SymmetrySolution solve_symmetries(const HypersurfaceModel& model, int degree);

struct LeviCandidate {
  Subspace subspace;
  std::string reference;  // name accepted by reference_algebra, or "0"
};

/// The semisimple part named for each catalog: su(p,q) from the signs of
/// H_3..H_n for the indefinite family, su(2)+su(n-1) for the definite one.
/// L must be close_and_structure of the matching builtin_symmetries.
LeviCandidate catalog_levi_candidate(Family family, int n, const std::vector<int>& eps, const RealLieAlgebra& L);

}  // namespace crsym
