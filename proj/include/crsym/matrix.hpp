#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crsym/linalg.hpp"
#include "crsym/scalar.hpp"

namespace crsym {

/// Square matrices over the Gaussian rationals.
using CMatrix = DenseMatrix<Gaussian>;

CMatrix identity_matrix(int m);
/// Elementary matrix E_ij (0-based).
CMatrix unit_matrix(int m, int i, int j, const Gaussian& c = Gaussian(1));

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const Gaussian& c, const CMatrix& a);
CMatrix adjoint(const CMatrix& a);    // conjugate transpose
CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);  // entrywise
Gaussian trace(const CMatrix& a);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
bool is_zero(const CMatrix& a);
std::string matrix_str(const CMatrix& a);

/// Real coordinates of a complex matrix: (re, im) of each entry, row-major,
/// index 2*(i*m + j) + part.
SparseVec<Rational> real_coords(const CMatrix& a);

/// Real basis of { X in gl(m, C) : cond(X) = 0 } for a real-linear map
/// `cond` into a list of complex numbers. Deterministic (reduced echelon
/// order over the real coordinates).
std::vector<CMatrix> real_solution_basis(int m, const std::function<std::vector<Gaussian>(const CMatrix&)>& cond);

/// Complex analogue: basis of the complex-linear solution space of a
/// complex-linear condition.
std::vector<CMatrix> complex_solution_basis(int m, const std::function<std::vector<Gaussian>(const CMatrix&)>& cond);

}  // namespace crsym
