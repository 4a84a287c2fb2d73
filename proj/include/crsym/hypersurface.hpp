#pragma once

#include <string>
#include <vector>

#include "crsym/expr.hpp"
#include "crsym/linalg.hpp"
#include "crsym/vector_field.hpp"

namespace crsym {

enum class Family { Indefinite, Definite, Flat, Custom };

std::string family_name(Family f);
/// Accepts "indefinite", "definite", "flat" (and "custom").
Family parse_family(const std::string& name);

/// "++-" -> {1, 1, -1}; the empty string is the empty list.
std::vector<int> parse_signs(const std::string& text);
std::string signs_str(const std::vector<int>& eps);

struct LogTerm {
  Rational coeff;
  Poly arg;
};

struct LeviSignature {
  int pos = 0;
  int neg = 0;
  int null = 0;
  friend bool operator==(const LeviSignature& a, const LeviSignature& b) {
    return a.pos == b.pos && a.neg == b.neg && a.null == b.null;
  }
};

/// Rigid hypersurface Im(z_{n+1}) = phi(z', conj z') with phi a real
/// polynomial plus rational multiples of logs of real polynomials.
class HypersurfaceModel {
 public:
  /// Validates reality, rigidity, normalization at 0 and Levi
  /// nondegeneracy; throws std::invalid_argument on violation.
  HypersurfaceModel(Family family, int n, std::vector<int> eps, VarTable vars, Expr phi);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::vector<int>& eps() const { return eps_; }
  const VarTable& vars() const { return vars_; }
  const Expr& potential() const { return phi_; }
  const Poly& poly_part() const { return poly_part_; }
  const std::vector<LogTerm>& log_terms() const { return log_terms_; }

  /// F = (z_{n+1} - w_{n+1})/(2i) - phi.
  Expr defining_function() const;
  /// Image of e under z_{n+1} -> u + i phi, w_{n+1} -> u - i phi.
  Expr restrict_to_surface(const Expr& e) const;

 private:
  Family family_;
  int n_;
  std::vector<int> eps_;
  VarTable vars_;
  Expr phi_;
  Poly poly_part_;
  std::vector<LogTerm> log_terms_;
};

/// Built-in families:
///   Indefinite  phi = Im(z1 conj z2) + |z1|^4 + sum_{k>=3} eps_k |z_k|^2   (n >= 2, |eps| = n-2)
///   Definite    phi = log(1 + |z1|^2) + sum_{k>=2} |z_k|^2                 (n >= 2)
///   Flat        phi = sum_k eps_k |z_k|^2                                   (n >= 1, |eps| = n)
HypersurfaceModel builtin_model(Family family, int n, const std::vector<int>& eps = {});

/// Model from potential text in z1..zn.
HypersurfaceModel custom_model(int n, const std::string& potential);

/// Model file: "n = <int>" then "potential = <expr>"; blank lines and
/// lines starting with '#' are ignored.
HypersurfaceModel parse_model_file(const std::string& content);

/// (V + conj V) F restricted to the hypersurface; V is an infinitesimal
/// symmetry iff the residual is zero.
Expr tangency_residual(const HypersurfaceModel& model, const HoloVectorField& v);

/// Hermitian matrix d^2 phi / dz_j d conj z_k at the origin.
DenseMatrix<Gaussian> levi_matrix(const HypersurfaceModel& model);
LeviSignature levi_signature(const HypersurfaceModel& model);

}  // namespace crsym
