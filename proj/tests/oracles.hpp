#pragma once

// Reference computations written directly from the classical formulas, sharing
// only Rational with the library.

#include "trideform/rational.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using trideform::Rational;
using Table = std::vector<Rational>; // t[(i * n + j) * n + l] = coefficient of e_l in e_i e_j

inline std::vector<Rational> mul(const Table& t, std::size_t n, const std::vector<Rational>& x,
                                 const std::vector<Rational>& y) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      const Rational c = x[i] * y[j];
      for (std::size_t l = 0; l < n; ++l)
        out[l] += c * t[(i * n + j) * n + l];
    }
  }
  return out;
}

inline bool associative(const Table& t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> ei(n), ej(n), ek(n);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        if (mul(t, n, mul(t, n, ei, ej), ek) != mul(t, n, ei, mul(t, n, ej, ek)))
          return false;
      }
  return true;
}

/// Structure constants of A (x) B with product alpha + beta, basis index a * b + p.
/// beta[((a * na + c) * na + l) * nb + s] = coefficient of e_l (x) f_s in beta(e_a, e_c).
inline Table deformed(const Table& alpha, std::size_t na, const Table& base, std::size_t nb, const Table& beta) {
  const std::size_t d = na * nb;
  Table out(d * d * d);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t c = 0; c < na; ++c)
      for (std::size_t p = 0; p < nb; ++p)
        for (std::size_t q = 0; q < nb; ++q)
          for (std::size_t r = 0; r < nb; ++r) {
            const Rational pq = base[(p * nb + q) * nb + r];
            if (pq.is_zero())
              continue;
            const std::size_t row = ((a * nb + p) * d + c * nb + q) * d;
            for (std::size_t l = 0; l < na; ++l) {
              out[row + l * nb + r] += alpha[(a * na + c) * na + l] * pq;
              for (std::size_t s = 0; s < nb; ++s) {
                const Rational b = beta[((a * na + c) * na + l) * nb + s];
                if (b.is_zero())
                  continue;
                for (std::size_t u = 0; u < nb; ++u)
                  out[row + l * nb + u] += b * pq * base[(s * nb + r) * nb + u];
              }
            }
          }
  return out;
}

inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero())
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero())
        continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t power(std::size_t n, std::size_t k) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i)
    p *= n;
  return p;
}

/// Matrix of the classical Hochschild differential C^k -> C^(k+1), k >= 1:
/// (df)(a0..ak) = a0 f(a1..ak) + sum_i (-1)^(i+1) f(.., a_i a_(i+1), ..) + (-1)^(k+1) f(a0..a_(k-1)) ak.
/// Columns index (tuple, output letter); rows likewise.
inline std::vector<std::vector<Rational>> hochschild(const Table& t, std::size_t n, std::size_t k) {
  const std::size_t src = power(n, k) * n, dst = power(n, k + 1) * n;
  std::vector<std::vector<Rational>> m(dst, std::vector<Rational>(src));
  auto decode = [n](std::size_t idx, std::size_t len) {
    std::vector<std::size_t> out(len);
    for (std::size_t i = len; i-- > 0;) {
      out[i] = idx % n;
      idx /= n;
    }
    return out;
  };
  auto encode = [n](const std::vector<std::size_t>& tuple) {
    std::size_t idx = 0;
    for (auto x : tuple)
      idx = idx * n + x;
    return idx;
  };
  for (std::size_t in = 0; in < power(n, k + 1); ++in) {
    const auto a = decode(in, k + 1);
    // contribution of f(tuple) = e_l: column encode(tuple) * n + l
    auto add = [&](const std::vector<std::size_t>& tuple, const Rational& coeff, bool left, bool right,
                   std::size_t letter) {
      const std::size_t base_col = encode(tuple) * n;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t out = 0; out < n; ++out) {
          Rational c;
          if (left)
            c = t[(letter * n + l) * n + out];
          else if (right)
            c = t[(l * n + letter) * n + out];
          else
            c = l == out ? Rational(1) : Rational(0);
          if (!c.is_zero())
            m[in * n + out][base_col + l] += coeff * c;
        }
    };
    add(std::vector<std::size_t>(a.begin() + 1, a.end()), Rational(1), true, false, a[0]);
    for (std::size_t i = 0; i < k; ++i) {
      const Rational sign((i + 1) % 2 == 0 ? 1 : -1);
      for (std::size_t l = 0; l < n; ++l) {
        const Rational c = t[(a[i] * n + a[i + 1]) * n + l];
        if (c.is_zero())
          continue;
        std::vector<std::size_t> tuple(a.begin(), a.begin() + static_cast<long>(i));
        tuple.push_back(l);
        tuple.insert(tuple.end(), a.begin() + static_cast<long>(i) + 2, a.end());
        add(tuple, sign * c, false, false, 0);
      }
    }
    add(std::vector<std::size_t>(a.begin(), a.end() - 1), Rational((k + 1) % 2 == 0 ? 1 : -1), false, true, a[k]);
  }
  return m;
}

/// dim HH^k with C^0 = 0.
inline std::size_t hh(const Table& t, std::size_t n, std::size_t k) {
  const auto d = hochschild(t, n, k);
  const std::size_t cocycles = power(n, k) * n - rank(d);
  const std::size_t boundaries = k >= 2 ? rank(hochschild(t, n, k - 1)) : 0;
  return cocycles - boundaries;
}

} // namespace oracle
