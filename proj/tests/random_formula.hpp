#pragma once

#include <random>
#include <string>

namespace testgen {

// Random pure ZF formula text over set variables x1..x<vars>.
class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, int vars) : rng_(seed), vars_(vars) {}

  std::string formula(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
    switch (pick(rng_)) {
      case 0: return "( " + var() + " in " + var() + " )";
      case 1: return "( " + var() + " = " + var() + " )";
      case 2: return "! " + formula(depth - 1);
      case 3: return binary("->", depth);
      case 4: return binary("<->", depth);
      case 5: return binary("&", depth);
      case 6: return binary("|", depth);
      case 7: return "( E " + var() + " " + formula(depth - 1) + " )";
      default: return "( A " + var() + " " + formula(depth - 1) + " )";
    }
  }

  std::string var() {
    std::uniform_int_distribution<int> pick(1, vars_);
    return "x" + std::to_string(pick(rng_));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::string binary(const char* op, int depth) {
    std::string left = formula(depth - 1);
    return "( " + left + " " + op + " " + formula(depth - 1) + " )";
  }

  std::mt19937_64 rng_;
  int vars_;
};

}  // namespace testgen
