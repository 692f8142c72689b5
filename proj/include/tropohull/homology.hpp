#pragma once

// Integer chain complexes: Smith normal form, reduced homology, acyclicity.
//
// A ChainComplex holds free modules C_0..C_n and boundary maps
// d_k : C_k -> C_{k-1}. Reduced homology augments with C_{-1} = Z and
// d_0 = (1, ..., 1), so the empty complex has H_{-1} = Z and is not acyclic.

#include "tropohull/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tropohull {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix transposed() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

// left * m * right = diagonal matrix with entries d_1 | d_2 | ... (nonnegative).
struct SmithForm {
  std::vector<Integer> diagonal;  // the nonzero invariant factors, then zeros up to min(rows, cols)
  IntMatrix left, right;         // empty unless requested
};
SmithForm smith_normal_form(IntMatrix m, bool with_transforms = false);

std::size_t rational_rank(const IntMatrix& m);
// Determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[k-1] is d_k : C_k -> C_{k-1}, a ranks[k-1] x ranks[k] matrix.
  // Throws InvariantViolation unless every composite d_k d_{k+1} vanishes.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const;
  // d_k for k >= 1; d_0 is the augmentation.
  IntMatrix boundary(int k) const;
  std::vector<std::size_t> ranks() const { return ranks_; }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Degrees -1 .. top.
struct HomologyReport {
  std::vector<HomologyGroup> groups;
  const HomologyGroup& at(int degree) const { return groups.at(static_cast<std::size_t>(degree + 1)); }
  std::vector<std::size_t> betti() const;  // free ranks, degree -1 first
  bool acyclic() const;
  std::string to_string() const;
};

// Checks the Euler characteristic and the rational Betti numbers against the
// integer computation; a mismatch is an InvariantViolation.
HomologyReport reduced_homology(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);

// Simplices as sorted vertex lists; the list is closed under taking faces
// before the chain complex is built. The empty simplex is ignored.
using Simplex = std::vector<std::size_t>;
ChainComplex simplicial_chain_complex(std::vector<Simplex> simplices);

// Strict partial order on {0..n-1}: less[a][b] means a < b.
struct Poset {
  std::vector<std::vector<bool>> less;
  std::size_t size() const { return less.size(); }
};
// All chains of the poset, as simplices.
std::vector<Simplex> order_complex(const Poset& p);

}  // namespace tropohull
