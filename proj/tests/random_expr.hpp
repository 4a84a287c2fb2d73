#pragma once

// Random grammar-valid expression texts for property tests.

#include <random>
#include <string>

namespace crsym::testing {

class ExprTextGen {
 public:
  explicit ExprTextGen(unsigned seed, bool with_logs = true) : rng_(seed), logs_(with_logs) {}

  std::string expr(int depth = 3) {
    int terms = pick(1, 3);
    std::string out;
    for (int t = 0; t < terms; ++t) {
      if (t > 0) out += pick(0, 1) ? " + " : " - ";
      out += term(depth);
    }
    return out;
  }

  std::string term(int depth) {
    int factors = pick(1, 3);
    std::string out;
    for (int f = 0; f < factors; ++f) {
      if (f > 0) out += "*";
      out += factor(depth);
    }
    return out;
  }

  std::string factor(int depth) {
    std::string b = base(depth);
    if (pick(0, 4) == 0) b += "^" + std::to_string(pick(0, 2));
    return b;
  }

  std::string base(int depth) {
    int choice = depth <= 0 ? pick(0, 3) : pick(0, 9);
    switch (choice) {
      case 0:
        return pick(0, 2) ? std::to_string(pick(1, 5)) : std::to_string(pick(1, 5)) + "/" + std::to_string(pick(1, 4));
      case 1:
        return "i";
      case 2:
        return "z" + std::to_string(pick(1, 3));
      case 3:
        return pick(0, 1) ? "u" : "z" + std::to_string(pick(1, 2));
      case 4:
        return "(" + expr(depth - 1) + ")";
      case 5:
        return "conj(" + expr(depth - 1) + ")";
      case 6:
        return "abs2(" + term(depth - 1) + ")";
      case 7:
        return (pick(0, 1) ? "Re(" : "Im(") + expr(depth - 1) + ")";
      case 8:
        return logs_ ? "log(1 + z1*conj(z1))" : "z2";
      default:
        return logs_ && pick(0, 1) ? "log(1 + z2*conj(z2) + z1*conj(z1))" : "conj(z1)";
    }
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
  bool logs_;
};

}  // namespace crsym::testing
