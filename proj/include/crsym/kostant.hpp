#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crsym/parabolic.hpp"

namespace crsym {

/// Marks: coordinates over the fundamental weights, one per Dynkin node
/// (node i is 1-based in the API, stored at i-1).
using Marks = std::vector<int>;

/// Root system A_l, simple roots alpha_1..alpha_l.
class RootSystemA {
 public:
  explicit RootSystemA(int rank);

  int rank() const { return rank_; }
  int cartan(int i, int j) const;  // 1-based
  /// Positive roots as simple-root coefficient vectors.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  Marks rho() const { return Marks(static_cast<size_t>(rank_), 1); }
  /// Highest root omega_1 + omega_l.
  Marks highest_root() const;

  /// Simple reflection s_i on a weight given by marks.
  Marks reflect(Marks m, int i) const;
  /// s_i on a root given by simple-root coefficients.
  std::vector<int> reflect_root(std::vector<int> a, int i) const;
  /// w = s_{word[0]} ... s_{word[k-1]} (rightmost applied first).
  Marks apply(const std::vector<int>& word, Marks m) const;
  /// Affine action w(lambda + rho) - rho.
  Marks affine(const std::vector<int>& word, const Marks& lambda) const;
  /// { alpha > 0 : w^{-1} alpha < 0 } as simple-root coefficient vectors.
  std::vector<std::vector<int>> inversion_set(const std::vector<int>& word) const;
  /// <mu, omega_i^vee + omega_j^vee>, i.e. the eigenvalue of the element
  /// dual to the crossed nodes i, j.
  Rational pairing_with_coweights(const Marks& mu, const std::vector<int>& nodes) const;

 private:
  int rank_;
  std::vector<std::vector<int>> positive_;
};

struct HasseComponent {
  std::pair<int, int> word;     // (a, b): w = s_a s_b
  Marks marks;                  // w . lambda = minus the lowest weight
  std::pair<int, int> partner;  // word under the diagram flip i -> l+1-i
  int homogeneity = 0;          // grading-element eigenvalue on the lowest weight
  bool self_conjugate() const { return partner == word; }
};

/// Length-2 elements of W^p for the crossed nodes {1, l}, in the order
/// (1,2), (l,l-1), (1,l). Throws std::invalid_argument for l < 3.
std::vector<HasseComponent> hasse_weight2(int l);
/// Orbits of the conjugation pairing.
int real_component_count(const std::vector<HasseComponent>& comps);

struct SatakeData {
  int rank = 0;
  int arrows = 0;
  int black = 0;
  int white = 0;
  std::vector<int> crossed;
  std::vector<bool> black_nodes;            // per node
  std::vector<std::pair<int, int>> arrow_pairs;
};

/// Satake diagram of su(k+1, n-k+1) with crosses at 1 and n+1.
SatakeData satake(int k, int n);
/// Three lines: "nodes: ...", "marks: ..." (if given), "arrows: ...".
std::string render_diagram(const SatakeData& s, const Marks& marks = {});

struct LowestWeightResult {
  Marks weight;                         // marks of the lowest weight mu
  std::vector<SparseVec<Gaussian>> vectors;
  bool real = false;                    // span_C(vectors[0]) is sigma-stable
  int annihilator_dim = 0;              // complex dimension in g_0 (x) C
};

/// Weight (marks) of a weight vector of the complexified graded algebra.
Marks weight_of(const GradedAlgebra<Gaussian>& g, int a);
/// Weight of a basis vector of the complexified curvature module.
Marks module_weight(const CurvatureModule<Gaussian>& M, int b);
/// The real structure on the complexified module,
/// (sigma Psi)(u, v) = sigma(Psi(sigma u, sigma v)).
SparseVec<Gaussian> sigma_module(const GradedSU& G, const CurvatureModule<Gaussian>& M, const SparseVec<Gaussian>& w);

/// Vectors of weight -marks killed by the lowering operators of the
/// semisimple part of g_0. Throws std::invalid_argument if the component
/// does not live in Lambda^2 g_{-1}^* (x) g_0 (homogeneity != 2) or the
/// rank does not match, std::logic_error if nothing is found.
LowestWeightResult lowest_weight_vectors(const GradedSU& G, const HasseComponent& comp);

struct BoundsTable {
  int n = 0;
  int k = 0;
  int max_dim = 0;
  int submax_dim = 0;
  int universal_bound = 0;
  int stability_group = 0;
  int complex_annihilator_bound = 0;
  int definite_annihilator_bound = 0;
};

BoundsTable bounds(int n, int k);

}  // namespace crsym
