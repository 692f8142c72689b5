#include "oracles.hpp"

#include <functional>
#include <map>

namespace oracle {

TropicalDet tropical_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  TropicalDet out;
  bool first = true;
  do {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += m[i][p[i]];
    if (first || s > out.value) {
      out.value = s;
      out.optimal.clear();
      first = false;
    }
    if (s == out.value) out.optimal.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (out.optimal.size() == 1) {
    int inv = 0;
    const auto& q = out.optimal.front();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += q[i] > q[j];
    out.sign = inv % 2 ? -1 : 1;
  }
  return out;
}

bool member_by_types(const TropicalPoint& x, const std::vector<TropicalPoint>& v) {
  const std::size_t d = x.dim();
  std::vector<bool> covered(d, false);
  for (const auto& p : v) {
    Rational best = p[0] - x[0];
    for (std::size_t j = 1; j < d; ++j) best = std::max(best, Rational(p[j] - x[j]));
    for (std::size_t j = 0; j < d; ++j)
      if (p[j] - x[j] == best) covered[j] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

TropicalPoint combination(const std::vector<Rational>& c, const std::vector<TropicalPoint>& v) {
  std::vector<Rational> out(v[0].dim());
  for (std::size_t j = 0; j < out.size(); ++j) {
    Rational best = c[0] + v[0][j];
    for (std::size_t i = 1; i < v.size(); ++i) best = std::max(best, Rational(c[i] + v[i][j]));
    out[j] = best;
  }
  return TropicalPoint(out);
}

int halfspace_side(const TropicalPoint& x, const std::vector<Rational>& apex, std::uint32_t sectors) {
  std::optional<Rational> in, out;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const Rational v = x[j] - apex[j];
    auto& slot = (sectors >> j & 1) ? in : out;
    if (!slot || v > *slot) slot = v;
  }
  if (!out) return 1;
  if (!in) return -1;
  return *in > *out ? 1 : (*in == *out ? 0 : -1);
}

std::set<Mask> grid_j_facets(const std::vector<TropicalPoint>& v, Rational lo, Rational hi, Rational step) {
  const std::size_t d = v[0].dim();
  std::set<Mask> found;
  std::vector<Rational> apex(d, Rational(0));
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == d) {
      for (std::uint32_t a = 1; a + 1 < (1u << d); ++a) {
        Mask on = 0;
        bool ok = true;
        for (std::size_t i = 0; i < v.size() && ok; ++i) {
          const int s = halfspace_side(v[i], apex, a);
          if (s < 0) ok = false;
          if (s == 0) on |= Mask{1} << i;
        }
        const Mask all = (Mask{1} << v.size()) - 1;
        if (ok && on != 0 && on != all) found.insert(on);
      }
      return;
    }
    for (Rational c = lo; c <= hi; c += step) {
      c.canonicalize();
      apex[j] = c;
      rec(j + 1);
    }
  };
  rec(1);
  std::set<Mask> maximal;
  for (Mask m : found) {
    bool dominated = false;
    for (Mask o : found) dominated = dominated || (o != m && (o & m) == m);
    if (!dominated) maximal.insert(m);
  }
  return maximal;
}

std::vector<TropicalPoint> segment_samples(const TropicalPoint& p, const TropicalPoint& q, Rational lo, Rational hi,
                                           Rational step) {
  std::vector<TropicalPoint> out;
  for (Rational l = lo; l <= hi; l += step) {
    l.canonicalize();
    std::vector<Rational> c(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) c[j] = std::max(Rational(l + p[j]), q[j]);
    out.emplace_back(c);
  }
  return out;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

Exp subset_lcm(const std::vector<Exp>& gens, Mask s) {
  Exp out(gens[0].size(), 0);
  for (auto i : bits(s)) out = lcm(out, gens[i]);
  return out;
}

// Reduced rational Betti numbers of the complex whose faces are the given
// subsets (closed under taking nonempty subsets by the caller).
std::vector<std::size_t> reduced_betti(const std::vector<Mask>& faces) {
  int top = -1;
  for (Mask f : faces) top = std::max(top, static_cast<int>(bits(f).size()) - 1);
  std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top + 2));  // index dim+1
  by_dim[0].push_back(0);
  for (Mask f : faces) by_dim[bits(f).size()].push_back(f);
  // rank of the boundary from dim k to dim k-1 (k >= 0, the empty face has dim -1)
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    std::map<Mask, std::size_t> row;
    for (std::size_t i = 0; i < by_dim[k - 1].size(); ++i) row[by_dim[k - 1][i]] = i;
    std::vector<std::vector<Rational>> m(by_dim[k - 1].size(), std::vector<Rational>(by_dim[k].size(), 0));
    for (std::size_t c = 0; c < by_dim[k].size(); ++c) {
      const auto vs = bits(by_dim[k][c]);
      for (std::size_t i = 0; i < vs.size(); ++i) m[row.at(by_dim[k][c] & ~(Mask{1} << vs[i]))][c] = i % 2 ? -1 : 1;
    }
    ranks[k] = rank(m);
  }
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k < by_dim.size(); ++k) betti.push_back(by_dim[k].size() - ranks[k] - ranks[k + 1]);
  return betti;
}

}  // namespace

std::set<Mask> scarf_naive(const std::vector<Exp>& gens) {
  const std::size_t n = gens.size();
  std::set<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    bool unique = true;
    for (Mask o = 1; o < (Mask{1} << n) && unique; ++o)
      if (o != s && subset_lcm(gens, o) == subset_lcm(gens, s)) unique = false;
    if (unique) out.insert(s);
  }
  return out;
}

std::vector<std::size_t> taylor_betti(const std::vector<Exp>& gens) {
  const std::size_t n = gens.size();
  std::set<Exp> degrees;
  for (Mask s = 1; s < (Mask{1} << n); ++s) degrees.insert(subset_lcm(gens, s));
  std::vector<std::size_t> betti;
  for (const auto& b : degrees) {
    std::vector<Mask> faces;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      const Exp l = subset_lcm(gens, s);
      if (divides(l, b) && l != b) faces.push_back(s);
    }
    const auto h = reduced_betti(faces);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (betti.size() <= i) betti.resize(i + 1, 0);
      betti[i] += h[i];
    }
  }
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

std::vector<std::size_t> simplicial_betti(const std::vector<std::vector<std::size_t>>& generators) {
  std::set<Mask> faces;
  for (const auto& g : generators) {
    Mask m = 0;
    for (auto v : g) m |= Mask{1} << v;
    for (Mask s = m; s; s = (s - 1) & m) faces.insert(s);
  }
  return reduced_betti({faces.begin(), faces.end()});
}

}  // namespace oracle
