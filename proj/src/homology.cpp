#include "tropohull/homology.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace tropohull {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("ragged integer matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << at(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

class Reducer {
 public:
  Reducer(IntMatrix m, bool track) : m_(std::move(m)), track_(track) {
    if (track_) {
      left_ = IntMatrix::identity(m_.rows());
      right_ = IntMatrix::identity(m_.cols());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_.at(a, c), m_.at(b, c));
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c) std::swap(left_.at(a, c), left_.at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m_.rows(); ++r) std::swap(m_.at(r, a), m_.at(r, b));
    if (track_)
      for (std::size_t r = 0; r < right_.rows(); ++r) std::swap(right_.at(r, a), right_.at(r, b));
  }
  // row a += q * row b
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_.at(a, c) += q * m_.at(b, c);
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c) left_.at(a, c) += q * left_.at(b, c);
  }
  // col a += q * col b
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t r = 0; r < m_.rows(); ++r) m_.at(r, a) += q * m_.at(r, b);
    if (track_)
      for (std::size_t r = 0; r < right_.rows(); ++r) right_.at(r, a) += q * right_.at(r, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_.at(a, c) = -m_.at(a, c);
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c) left_.at(a, c) = -left_.at(a, c);
  }

  SmithForm run() {
    const std::size_t n = std::min(m_.rows(), m_.cols());
    SmithForm out;
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_smallest_to(t)) break;
      while (true) {
        if (!clear_cross(t)) continue;
        // Divisibility: fold an offending row into row t and start over.
        auto bad = find_indivisible(t);
        if (!bad) break;
        add_row(t, *bad, 1);
      }
      if (m_.at(t, t) < 0) negate_row(t);
      out.diagonal.push_back(m_.at(t, t));
    }
    out.diagonal.resize(n, Integer(0));
    if (track_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
    }
    return out;
  }

 private:
  // Smallest nonzero |entry| in the trailing block moves to (t, t).
  bool move_smallest_to(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    for (std::size_t r = t; r < m_.rows(); ++r)
      for (std::size_t c = t; c < m_.cols(); ++c) {
        if (m_.at(r, c) == 0) continue;
        if (!found || abs(m_.at(r, c)) < abs(m_.at(br, bc))) {
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Clears row t and column t beyond the pivot. Returns false when a smaller
  // remainder was swapped into the pivot and the pass must restart.
  bool clear_cross(std::size_t t) {
    for (std::size_t r = t + 1; r < m_.rows(); ++r) {
      if (m_.at(r, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m_.at(r, t).get_mpz_t(), m_.at(t, t).get_mpz_t());
      add_row(r, t, -q);
      if (m_.at(r, t) != 0) {
        swap_rows(t, r);
        return false;
      }
    }
    for (std::size_t c = t + 1; c < m_.cols(); ++c) {
      if (m_.at(t, c) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m_.at(t, c).get_mpz_t(), m_.at(t, t).get_mpz_t());
      add_col(c, t, -q);
      if (m_.at(t, c) != 0) {
        swap_cols(t, c);
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> find_indivisible(std::size_t t) const {
    for (std::size_t r = t + 1; r < m_.rows(); ++r)
      for (std::size_t c = t + 1; c < m_.cols(); ++c)
        if (!mpz_divisible_p(m_.at(r, c).get_mpz_t(), m_.at(t, t).get_mpz_t())) return r;
    return std::nullopt;
  }

  IntMatrix m_;
  bool track_;
  IntMatrix left_, right_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m, bool with_transforms) { return Reducer(std::move(m), with_transforms).run(); }

namespace {

// Fraction-free elimination; returns the rank and leaves the last pivot in *last.
std::size_t bareiss_rank(IntMatrix m, int* sign_flips, Integer* last) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
      if (sign_flips) ++*sign_flips;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(v);
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  if (last) *last = prev;
  return r;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& m) { return bareiss_rank(m, nullptr, nullptr); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  int flips = 0;
  Integer last;
  if (bareiss_rank(m, &flips, &last) < m.rows()) return 0;
  return flips % 2 ? Integer(-last) : last;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) {
    if (!boundaries_.empty()) throw DimensionError("boundaries for an empty complex");
    return;
  }
  if (boundaries_.size() + 1 != ranks_.size()) throw DimensionError("chain complex needs one boundary per positive degree");
  for (std::size_t k = 0; k < boundaries_.size(); ++k)
    if (boundaries_[k].rows() != ranks_[k] || boundaries_[k].cols() != ranks_[k + 1])
      throw DimensionError("boundary matrix of degree " + std::to_string(k + 1) + " has the wrong shape");
  for (int k = 0; k < top_degree(); ++k)
    if (!(boundary(k) * boundary(k + 1)).is_zero())
      throw InvariantViolation("boundary of a boundary is nonzero in degree " + std::to_string(k + 1));
}

std::size_t ChainComplex::rank(int k) const {
  if (k == -1) return 1;
  if (k < -1 || k > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(k)];
}

IntMatrix ChainComplex::boundary(int k) const {
  if (k == 0) {
    IntMatrix aug(1, rank(0));
    for (std::size_t c = 0; c < aug.cols(); ++c) aug.at(0, c) = 1;
    return aug;
  }
  if (k < 0) return IntMatrix(0, 1);
  if (k > top_degree()) return IntMatrix(rank(k - 1), 0);
  return boundaries_[static_cast<std::size_t>(k - 1)];
}

std::vector<std::size_t> HomologyReport::betti() const {
  std::vector<std::size_t> b;
  for (const auto& g : groups) b.push_back(g.free_rank);
  return b;
}

bool HomologyReport::acyclic() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

std::string HomologyReport::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    if (g.trivial()) continue;
    if (any) out << ", ";
    any = true;
    out << "H" << static_cast<int>(i) - 1 << " = ";
    bool first = true;
    if (g.free_rank) {
      out << "Z";
      if (g.free_rank > 1) out << "^" << g.free_rank;
      first = false;
    }
    for (const auto& t : g.torsion) {
      out << (first ? "" : " + ") << "Z/" << t.get_str();
      first = false;
    }
  }
  return any ? out.str() : "acyclic";
}

HomologyReport reduced_homology(const ChainComplex& c) {
  const int top = c.top_degree();
  // Invariant factors of d_k, for k = 0 .. top+1.
  std::vector<SmithForm> snf;
  std::vector<std::size_t> snf_rank, q_rank;
  for (int k = 0; k <= top + 1; ++k) {
    IntMatrix d = c.boundary(k);
    q_rank.push_back(rational_rank(d));
    snf.push_back(smith_normal_form(d));
    snf_rank.push_back(static_cast<std::size_t>(
        std::count_if(snf.back().diagonal.begin(), snf.back().diagonal.end(), [](const Integer& x) { return x != 0; })));
    if (snf_rank.back() != q_rank.back())
      throw InvariantViolation("Smith form rank disagrees with rational rank in degree " + std::to_string(k));
  }
  auto rank_of_d = [&](int k) -> std::size_t { return k < 0 || k > top + 1 ? 0 : snf_rank[static_cast<std::size_t>(k)]; };

  HomologyReport report;
  long euler_chains = 0, euler_homology = 0;
  for (int k = -1; k <= top; ++k) {
    HomologyGroup g;
    g.free_rank = c.rank(k) - rank_of_d(k) - rank_of_d(k + 1);
    if (k + 1 <= top + 1)
      for (const auto& x : snf[static_cast<std::size_t>(k + 1)].diagonal)
        if (x > 1) g.torsion.push_back(x);
    const long sign = (k + 1) % 2 == 0 ? -1 : 1;  // (-1)^k
    euler_chains += sign * static_cast<long>(c.rank(k));
    euler_homology += sign * static_cast<long>(g.free_rank);
    report.groups.push_back(std::move(g));
  }
  if (euler_chains != euler_homology) throw InvariantViolation("Euler characteristic mismatch");
  return report;
}

bool is_acyclic(const ChainComplex& c) { return reduced_homology(c).acyclic(); }

ChainComplex simplicial_chain_complex(std::vector<Simplex> simplices) {
  std::set<Simplex> all;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    // Every nonempty subset.
    if (s.size() > 30) throw DimensionError("simplex too large");
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    if (all.count(s)) continue;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      Simplex f;
      for (std::uint32_t i = 0; i < n; ++i)
        if (bits >> i & 1u) f.push_back(s[i]);
      all.insert(std::move(f));
    }
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (const auto& s : all) {
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].push_back(s);
  }
  std::vector<std::size_t> ranks;
  for (const auto& v : by_dim) ranks.push_back(v.size());
  std::vector<IntMatrix> boundaries;
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    IntMatrix d(by_dim[k - 1].size(), by_dim[k].size());
    for (std::size_t c = 0; c < by_dim[k].size(); ++c) {
      const auto& s = by_dim[k][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(i));
        auto it = std::lower_bound(by_dim[k - 1].begin(), by_dim[k - 1].end(), f);
        d.at(static_cast<std::size_t>(it - by_dim[k - 1].begin()), c) = i % 2 ? -1 : 1;
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

std::vector<Simplex> order_complex(const Poset& p) {
  std::vector<Simplex> chains;
  Simplex current;
  // Chains are extended upward from their largest element.
  auto extend = [&](auto&& self, std::size_t top) -> void {
    chains.push_back(current);
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.less[top][b]) continue;
      current.push_back(b);
      self(self, b);
      current.pop_back();
    }
  };
  for (std::size_t a = 0; a < p.size(); ++a) {
    current = {a};
    extend(extend, a);
  }
  for (auto& c : chains) std::sort(c.begin(), c.end());
  return chains;
}

}  // namespace tropohull
