// Independent brute-force oracles for the tests. Deliberately naive: plain
// part lists, explicit Young-diagram grids and direct predicate checks, with
// nothing shared with the library beyond the types used for comparison.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint32_t>;  // non-increasing

inline void partitions_rec(std::uint32_t n, std::uint32_t max_part, Parts& cur,
                           const std::function<bool(std::uint32_t)>& ok, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t p = std::min(n, max_part); p >= 1; --p) {
    if (!ok(p)) continue;
    cur.push_back(p);
    partitions_rec(n - p, p, cur, ok, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(std::uint32_t n, const std::function<bool(std::uint32_t)>& ok =
                                                           [](std::uint32_t) { return true; }) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, ok, out);
  return out;
}

// Hook length of every cell, read off an explicit 0/1 grid.
inline std::map<std::uint64_t, std::uint64_t> hooks(const Parts& p) {
  std::map<std::uint64_t, std::uint64_t> out;
  const std::size_t rows = p.size();
  const std::size_t cols = rows ? p[0] : 0;
  std::vector<std::vector<bool>> grid(rows, std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < p[i]; ++j) grid[i][j] = true;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < p[i]; ++j) {
      std::uint64_t arm = 0, leg = 0;
      for (std::size_t jj = j + 1; jj < cols && grid[i][jj]; ++jj) ++arm;
      for (std::size_t ii = i + 1; ii < rows && grid[ii][j]; ++ii) ++leg;
      ++out[arm + leg + 1];
    }
  }
  return out;
}

inline std::uint64_t b_tk(std::uint32_t t, std::uint32_t k, std::uint32_t n) {
  std::uint64_t total = 0;
  for (const auto& p : partitions(n, [t](std::uint32_t v) { return v % t != 0; })) {
    auto h = hooks(p);
    total += h.count(k) ? h[k] : 0;
  }
  return total;
}

// An OPO-overpartition as (non-overlined parts, overlined value, tag).
struct Opo {
  Parts plain;
  std::uint32_t over;
  bool tagged;
};

inline std::uint32_t count(const Opo& x, std::uint32_t v) {
  return static_cast<std::uint32_t>(std::count(x.plain.begin(), x.plain.end(), v)) + (x.over == v ? 1 : 0);
}

// Every OPO-overpartition of n: each partition with each distinct part value overlined once.
inline std::vector<Opo> all_opo(std::uint32_t n) {
  std::vector<Opo> out;
  for (const auto& p : partitions(n)) {
    Parts distinct = p;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::uint32_t v : distinct) {
      Opo x{p, v, false};
      x.plain.erase(std::find(x.plain.begin(), x.plain.end(), v));
      out.push_back(x);
    }
  }
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// (t+1)^k c - m where m = t^k c, by repeated division.
inline std::uint64_t g(std::uint64_t m, std::uint32_t t) {
  std::uint32_t k = 0;
  std::uint64_t c = m;
  while (c % t == 0) {
    c /= t;
    ++k;
  }
  return ipow(t + 1, k) * c - m;
}

inline std::int64_t sum_g_all(const Opo& x, std::uint32_t t) {
  std::int64_t s = static_cast<std::int64_t>(g(x.over, t));
  for (auto p : x.plain) s += static_cast<std::int64_t>(g(p, t));
  return s;
}

inline bool none_div(const Parts& ps, std::uint32_t m) {
  return std::none_of(ps.begin(), ps.end(), [m](std::uint32_t p) { return p % m == 0; });
}

// Set membership written out directly from the definitions; tag ignored.
inline bool member(const std::string& set, std::uint32_t t, const Opo& x) {
  const std::uint32_t o = x.over;
  const bool odd = t % 2 == 1;
  const std::int64_t ones = count(x, 1);
  auto a_family = [&] { return o % 2 == 0 && o % (t + 1) != 0 && none_div(x.plain, t + 1); };
  auto factor = [&](std::uint64_t m, std::uint32_t& k) {
    k = 0;
    while (m % t == 0) {
      m /= t;
      ++k;
    }
    return m;
  };
  if (set == "A") return a_family();
  if (set == "A1" || set == "A2") {
    if (!a_family()) return false;
    bool first;
    if (odd) {
      first = ones >= sum_g_all(x, t);
    } else {
      std::uint32_t k;
      std::uint64_t c = factor(o, k);
      first = c % 2 == 0 ? ones >= sum_g_all(x, t)
                         : ones >= sum_g_all(x, t) - static_cast<std::int64_t>(c * ipow(t + 1, k - 1));
    }
    return set == "A1" ? first : !first;
  }
  if (set == "Ahat3" || set == "Ahat4") {
    if (odd || !a_family()) return false;
    std::uint32_t k;
    std::uint64_t c = factor(o, k);
    bool first = c % 2 == 0 ? ones >= sum_g_all(x, t) : ones >= static_cast<std::int64_t>(g(o, t));
    return set == "Ahat3" ? first : !first;
  }
  if (set == "E") {
    return (o == 2 * t + 1 || o == 2 * t + 3) &&
           std::all_of(x.plain.begin(), x.plain.end(), [t](std::uint32_t p) { return p == 2 * t + 2 || p % (t + 1); });
  }
  if (set == "F") {
    return (o == 2 * t - 1 || o == 2 * t + 1) &&
           std::all_of(x.plain.begin(), x.plain.end(), [t](std::uint32_t p) { return p == 2 * t || p % t; });
  }
  if (odd) {
    if (set == "B") return o % 2 == 0 && o % t != 0 && none_div(x.plain, t);
    if (set == "C") return o % t == 0 && (o / t) % 2 == 1 && none_div(x.plain, t);
    if (set == "D") return o % 2 == 0 && o % (2 * t + 2) != 0 && none_div(x.plain, t + 1);
  } else {
    if (set == "B") return o % (t + 1) == 0 && (o / (t + 1)) % 2 == 1 && none_div(x.plain, t + 1);
    if (set == "C") return o % 2 == 0 && o % t != 0 && none_div(x.plain, t);
    if (set == "D") return o % 2 == 0 && o % (2 * t) != 0 && none_div(x.plain, t);
  }
  return false;
}

inline std::uint64_t set_size(const std::string& set, std::uint32_t t, std::uint32_t n) {
  std::uint64_t c = 0;
  for (const auto& x : all_opo(n)) c += member(set, t, x) ? 1 : 0;
  return c;
}

inline std::string text(const Opo& x) {
  Parts all = x.plain;
  all.push_back(x.over);
  std::sort(all.rbegin(), all.rend());
  std::string s;
  bool marked = false;
  for (auto p : all) {
    if (!s.empty()) s += ",";
    if (!marked && p == x.over) {
      s += "~" + std::to_string(p) + (x.tagged ? "'" : "");
      marked = true;
    } else {
      s += std::to_string(p);
    }
  }
  return s;
}

// Coefficients of prod_{j in parts} 1/(1-q^j) by the counting recurrence, as
// a check on series built by the library from products and inverses.
inline std::vector<std::uint64_t> restricted_partition_counts(std::uint32_t n_max,
                                                              const std::function<bool(std::uint32_t)>& ok) {
  std::vector<std::uint64_t> c(n_max + 1, 0);
  c[0] = 1;
  for (std::uint32_t j = 1; j <= n_max; ++j) {
    if (!ok(j)) continue;
    for (std::uint32_t n = j; n <= n_max; ++n) c[n] += c[n - j];
  }
  return c;
}

}  // namespace oracle
