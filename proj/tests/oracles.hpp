// Reference computations written independently of the library code paths
// they check: fraction-free elimination over integers, monomials enumerated
// by direct powers, and evaluation of line products as scalar products.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

struct Pt {
  Q x, y;
};

inline Q power(const Q& base, int e) {
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// One row per point, one column per monomial x^i y^j with i + j <= n.
inline std::vector<Row> vandermonde(const std::vector<Pt>& pts, int n) {
  std::vector<Row> rows;
  for (const auto& p : pts) {
    Row r;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r.push_back(power(p.x, i) * power(p.y, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Bareiss fraction-free elimination after clearing denominators row-wise.
inline std::size_t rank(const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class l = 1;
    for (const auto& q : rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = rows[r][c].get_num() * (l / rows[r][c].get_den());
  }
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < n && rk < m; ++c) {
    std::size_t piv = rk;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < m; ++r) {
      for (std::size_t k = c + 1; k < n; ++k) a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

/// (a, b, c) with a*x + b*y + c.
using Lin = std::tuple<Q, Q, Q>;

inline Q eval_line(const Lin& l, const Pt& p) { return std::get<0>(l) * p.x + std::get<1>(l) * p.y + std::get<2>(l); }

inline Q eval_product(const std::vector<Lin>& lines, const Pt& p) {
  Q r = 1;
  for (const auto& l : lines) r *= eval_line(l, p);
  return r;
}

/// Univariate polynomial in y, coefficient i of y^i.
using Uni = std::vector<Q>;

inline void trim(Uni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

/// Degree of gcd(f, g) by the Euclidean algorithm over Q; -1 if both zero.
inline int gcd_degree(Uni f, Uni g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Uni r = f;
    while (r.size() >= g.size()) {
      const Q factor = r.back() / g.back();
      const std::size_t shift = r.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) r[i + shift] -= factor * g[i];
      trim(r);
      if (r.empty()) break;
    }
    f = std::move(g);
    g = std::move(r);
  }
  return static_cast<int>(f.size()) - 1;
}

inline Q random_small(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  Q r = num(rng);
  r /= den(rng);
  return r;
}

}  // namespace oracle
