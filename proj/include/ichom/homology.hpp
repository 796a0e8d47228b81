#pragma once

// Integral homology of finite chain complexes via Smith normal form.

#include <string>
#include <vector>

#include "ichom/rational.hpp"

namespace ichom::homology {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> invariant_factors(IntMatrix m);

// Chain groups Z^{sizes[k]} with boundary[k-1] : C_k -> C_{k-1} for k >= 1,
// a sizes[k-1] x sizes[k] matrix.
struct ChainComplex {
  std::vector<std::size_t> sizes;
  std::vector<IntMatrix> boundary;

  // Throws std::invalid_argument on mismatched shapes or a nonzero composite.
  void validate() const;
};

// All faces of the given facets (vertex index lists), oriented by increasing
// vertex index.
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> simplices;  // by dimension, sorted

  static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets);
  ChainComplex chain_complex() const;
};

struct HomologyGroup {
  int degree = 0;
  long long betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  std::string to_string() const;  // e.g. "Z^2 + Z/2"
};

std::vector<HomologyGroup> homology(const ChainComplex& complex);

}  // namespace ichom::homology
