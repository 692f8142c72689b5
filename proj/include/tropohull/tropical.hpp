#pragma once

// Max-plus primitives on tropical projective space TP^{d-1}.
//
// Points are stored in the canonical chart x_0 = 0. Sector indices are
// 0-based internally; reports print them 1-based.

#include "tropohull/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropohull {

// A subset of the coordinate indices {0, ..., d-1}, d <= 32.
class SectorSet {
 public:
  constexpr SectorSet() = default;
  constexpr explicit SectorSet(std::uint32_t bits) : bits_(bits) {}
  static SectorSet of(std::initializer_list<std::size_t> indices);
  static constexpr SectorSet full(std::size_t d) {
    return SectorSet(d >= 32 ? ~0u : ((1u << d) - 1u));
  }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(std::size_t i) { bits_ |= (1u << i); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool includes(SectorSet other) const { return (other.bits_ & ~bits_) == 0; }
  std::vector<std::size_t> indices() const;

  friend constexpr SectorSet operator|(SectorSet a, SectorSet b) { return SectorSet(a.bits_ | b.bits_); }
  friend constexpr SectorSet operator&(SectorSet a, SectorSet b) { return SectorSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(SectorSet, SectorSet) = default;
  friend constexpr auto operator<=>(SectorSet, SectorSet) = default;

  // 1-based digits, e.g. {1,2,3} -> "234".
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

class TropicalPoint {
 public:
  TropicalPoint() = default;
  // Canonicalizes: subtracts coords[0] from every coordinate.
  explicit TropicalPoint(RationalVector coords);
  static TropicalPoint from_integers(std::initializer_list<long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const RationalVector& coords() const { return coords_; }

  friend bool operator==(const TropicalPoint&, const TropicalPoint&) = default;
  friend bool operator<(const TropicalPoint& a, const TropicalPoint& b) { return a.coords_ < b.coords_; }

  std::string to_string() const;

 private:
  RationalVector coords_;
};

TropicalPoint canonicalize(std::span<const Rational> coords);

// Apex coordinates may be +infinity (std::nullopt).
class TropicalHyperplane {
 public:
  using Coordinate = std::optional<Rational>;

  TropicalHyperplane() = default;
  explicit TropicalHyperplane(std::vector<Coordinate> apex);
  explicit TropicalHyperplane(const TropicalPoint& apex);

  std::size_t dim() const { return apex_.size(); }
  const std::vector<Coordinate>& apex() const { return apex_; }
  bool finite(std::size_t i) const { return apex_[i].has_value(); }
  SectorSet finite_coordinates() const;

  friend bool operator==(const TropicalHyperplane&, const TropicalHyperplane&) = default;
  std::string to_string() const;

 private:
  std::vector<Coordinate> apex_;
};

class TropicalHalfspace {
 public:
  TropicalHalfspace(TropicalHyperplane apex, SectorSet sectors);

  const TropicalHyperplane& hyperplane() const { return apex_; }
  SectorSet sectors() const { return sectors_; }
  // Finite coordinates outside the chosen sectors.
  SectorSet complement() const;

  friend bool operator==(const TropicalHalfspace&, const TropicalHalfspace&) = default;
  std::string to_string() const;

 private:
  TropicalHyperplane apex_;
  SectorSet sectors_;
};

// Square matrix whose columns are points.
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  explicit TropicalMatrix(std::vector<RationalVector> rows);
  static TropicalMatrix from_columns(std::span<const TropicalPoint> columns);

  std::size_t size() const { return rows_.size(); }
  const Rational& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  TropicalMatrix with_columns_swapped(std::size_t a, std::size_t b) const;
  TropicalMatrix with_column_shifted(std::size_t col, const Rational& shift) const;

 private:
  std::vector<RationalVector> rows_;
};

TropicalPoint tconv_combination(std::span<const Rational> coeffs, std::span<const TropicalPoint> points);

struct Membership {
  bool inside = false;
  RationalVector coeffs;  // c_i = min_j (x_j - v_ij)
};
Membership membership(const TropicalPoint& x, std::span<const TropicalPoint> points);
bool contains(std::span<const TropicalPoint> points, const TropicalPoint& x);

SectorSet sectors_of(const TropicalPoint& x, const TropicalHyperplane& h);

enum class Position { interior, boundary, outside };
Position halfspace_position(const TropicalPoint& x, const TropicalHalfspace& hs);
std::string to_string(Position p);

// Optimal assignment value max_sigma sum_i a_{i, sigma(i)}.
Rational tropical_det(const TropicalMatrix& m);

struct TropicalSign {
  int sign = 0;
  Rational value;
  std::optional<std::vector<std::size_t>> permutation;  // row i -> column, present iff sign != 0
};
TropicalSign tropical_sign(const TropicalMatrix& m);

int permutation_sign(std::span<const std::size_t> perm);

using Chirotope = std::map<std::vector<std::size_t>, int>;
// Tropical sign of every d-subset of columns, subsets listed in increasing index order.
Chirotope chirotope(std::span<const TropicalPoint> points);
bool is_general_position(std::span<const TropicalPoint> points);

// Breakpoints of the tropical segment from q to p (inclusive), at most d points.
std::vector<TropicalPoint> tropical_segment(const TropicalPoint& p, const TropicalPoint& q);

// Indices of points not in the tropical hull of the others (duplicates keep the first).
std::vector<std::size_t> extreme_points(std::span<const TropicalPoint> points);

}  // namespace tropohull
