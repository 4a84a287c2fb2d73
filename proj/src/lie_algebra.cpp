#include "crsym/lie_algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace crsym {

RealLieAlgebra::RealLieAlgebra(std::vector<std::string> labels, std::vector<std::vector<RVec>> brackets)
    : labels_(std::move(labels)), br_(std::move(brackets)) {
  const size_t n = labels_.size();
  if (br_.size() != n) throw std::invalid_argument("bracket table size mismatch");
  for (const auto& row : br_) {
    if (row.size() != n) throw std::invalid_argument("bracket table size mismatch");
  }
  for (size_t a = 0; a < n; ++a) {
    if (!br_[a][a].empty()) throw std::invalid_argument("[e,e] != 0 for " + labels_[a]);
    for (size_t b = a + 1; b < n; ++b) {
      RVec s = br_[a][b];
      axpy(s, Rational(1), br_[b][a]);
      if (!s.empty()) throw std::invalid_argument("bracket table is not antisymmetric");
    }
  }
  if (!satisfies_jacobi()) throw std::invalid_argument("bracket table violates the Jacobi identity");
}

Rational RealLieAlgebra::constant(int a, int b, int c) const {
  for (const auto& [k, v] : bracket_basis(a, b)) {
    if (k == c) return v;
  }
  return Rational(0);
}

RVec RealLieAlgebra::bracket(const RVec& x, const RVec& y) const {
  RVec out;
  for (const auto& [a, xa] : x) {
    for (const auto& [b, yb] : y) {
      if (a == b) continue;
      axpy(out, Rational(xa * yb), bracket_basis(a, b));
    }
  }
  return out;
}

DenseMatrix<Rational> RealLieAlgebra::ad(const RVec& x) const {
  const int n = dim();
  DenseMatrix<Rational> m(n, n);
  for (int b = 0; b < n; ++b) {
    RVec col = bracket(x, unit_vec(b));
    for (const auto& [c, v] : col) m(c, b) = v;
  }
  return m;
}

std::vector<std::tuple<int, int, int, Rational>> RealLieAlgebra::triples() const {
  std::vector<std::tuple<int, int, int, Rational>> out;
  for (int a = 0; a < dim(); ++a) {
    for (int b = a + 1; b < dim(); ++b) {
      for (const auto& [c, v] : bracket_basis(a, b)) out.emplace_back(a, b, c, v);
    }
  }
  return out;
}

std::string RealLieAlgebra::triples_text() const {
  std::string out;
  for (const auto& [a, b, c, v] : triples()) {
    out += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + " " + to_string(v) + "\n";
  }
  return out;
}

RealLieAlgebra RealLieAlgebra::from_triples(int dim, const std::string& text) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  std::vector<std::vector<RVec>> br(static_cast<size_t>(dim), std::vector<RVec>(static_cast<size_t>(dim)));
  std::vector<std::vector<SparseBuilder<Rational>>> acc(static_cast<size_t>(dim),
                                                       std::vector<SparseBuilder<Rational>>(static_cast<size_t>(dim)));
  std::set<std::tuple<int, int, int>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    int a = -1, b = -1, c = -1;
    std::string value, extra;
    if (!(ls >> a >> b >> c >> value) || (ls >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'a b c value'");
    }
    if (a < 0 || b < 0 || c < 0 || a >= dim || b >= dim || c >= dim || a == b) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": index out of range");
    }
    if (!seen.emplace(std::min(a, b), std::max(a, b), c).second) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate entry");
    }
    Rational v = parse_rational(value);
    if (a > b) {
      std::swap(a, b);
      v = -v;
    }
    acc[static_cast<size_t>(a)][static_cast<size_t>(b)].add(c, v);
    acc[static_cast<size_t>(b)][static_cast<size_t>(a)].add(c, -v);
  }
  std::vector<std::string> labels;
  for (int a = 0; a < dim; ++a) {
    labels.push_back("e" + std::to_string(a));
    for (int b = 0; b < dim; ++b) br[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc[static_cast<size_t>(a)][static_cast<size_t>(b)].take();
  }
  return RealLieAlgebra(std::move(labels), std::move(br));
}

RealLieAlgebra RealLieAlgebra::subalgebra(const std::vector<RVec>& basis, std::vector<std::string> labels) const {
  SpanSolver<Rational> span(basis);
  const size_t k = basis.size();
  if (labels.empty()) {
    for (size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i));
  }
  if (labels.size() != k) throw std::invalid_argument("label count mismatch");
  std::vector<std::vector<RVec>> br(k, std::vector<RVec>(k));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a + 1; b < k; ++b) {
      auto c = span.coords(bracket(basis[a], basis[b]));
      if (!c) throw std::invalid_argument("subspace is not closed under the bracket");
      br[a][b] = to_sparse(*c);
      br[b][a] = br[a][b];
      scale(br[b][a], Rational(-1));
    }
  }
  return RealLieAlgebra(std::move(labels), std::move(br));
}

bool RealLieAlgebra::satisfies_jacobi() const {
  const int n = dim();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        RVec s = bracket(unit_vec(a), bracket_basis(b, c));
        axpy(s, Rational(1), bracket(unit_vec(b), bracket_basis(c, a)));
        axpy(s, Rational(1), bracket(unit_vec(c), bracket_basis(a, b)));
        if (!s.empty()) return false;
      }
    }
  }
  return true;
}

}  // namespace crsym
