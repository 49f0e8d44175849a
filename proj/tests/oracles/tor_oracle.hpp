#pragma once

// Brute-force Tor over F2[U] for the test suite. A module is a free tower
// plus cyclic summands F[U]/U^n. M1 is resolved as F1 -> F0 (one relation
// U^n g per torsion summand), the complex is tensored with M2 truncated at a
// fixed degree, and Tor_0 (cokernel) and Tor_1 (kernel) are split into
// cyclic summands by the ranks of powers of U between degrees. Nothing here
// shares code with the library.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace tor_oracle {

struct Result {
  std::vector<int> torsion;  // sorted
  int free_summands = 0;
};

namespace detail {

using Vec = std::uint32_t;

inline int rank(std::vector<Vec> v) {
  int r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    const Vec mask = Vec{1} << bit;
    auto pivot = std::find_if(v.begin() + r, v.end(), [&](Vec x) { return x & mask; });
    if (pivot == v.end()) continue;
    std::swap(v[static_cast<std::size_t>(r)], *pivot);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (static_cast<int>(i) != r && (v[i] & mask)) v[i] ^= v[static_cast<std::size_t>(r)];
    }
    ++r;
  }
  return r;
}

// Basis of the kernel of a linear map given by images of basis vectors.
inline std::vector<Vec> kernel(const std::vector<Vec>& images) {
  // Track combinations alongside images.
  std::vector<std::pair<Vec, Vec>> rows;
  for (std::size_t i = 0; i < images.size(); ++i) rows.push_back({images[i], Vec{1} << i});
  std::size_t r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    const Vec mask = Vec{1} << bit;
    auto pivot = std::find_if(rows.begin() + static_cast<long>(r), rows.end(), [&](auto& x) { return x.first & mask; });
    if (pivot == rows.end()) continue;
    std::swap(rows[r], *pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i].first & mask)) {
        rows[i].first ^= rows[r].first;
        rows[i].second ^= rows[r].second;
      }
    }
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t i = r; i < rows.size(); ++i) out.push_back(rows[i].second);
  return out;
}

// The module M2 in degree t: index 0 is the tower, index j >= 1 the summand
// of exponent m[j-1]. Present iff t >= 0 and (tower or t < m).
inline bool present(const std::vector<int>& m2, int j, int t) {
  if (t < 0) return false;
  return j == 0 || t < m2[static_cast<std::size_t>(j - 1)];
}

}  // namespace detail

/// Tor_0 and Tor_1 of (tower + sum F[U]/U^n1_i) with (tower + sum F[U]/U^n2_j)
/// combined, gradings forgotten. Exponents at most 8, at most 3 summands each.
inline Result tor(const std::vector<int>& m1, const std::vector<int>& m2) {
  using detail::Vec;
  constexpr int D = 20;
  const int k2 = static_cast<int>(m2.size()) + 1;  // basis slots of M2 per generator
  const int g1 = static_cast<int>(m1.size()) + 1;  // generators of F0 (index 0: tower)
  const int r1 = static_cast<int>(m1.size());      // relations, relation i kills U^n g_{i+1}

  // Coordinates: C0 bit g*4 + j, C1 bit i*4 + j, with j indexing M2.
  auto c0_basis = [&](int t) {
    std::vector<Vec> b;
    for (int g = 0; g < g1; ++g) {
      for (int j = 0; j < k2; ++j) {
        if (detail::present(m2, j, t)) b.push_back(Vec{1} << (g * 4 + j));
      }
    }
    return b;
  };
  // C1 in degree t: r_i (degree n_i) tensor M2 in degree t - n_i.
  auto c1_basis = [&](int t) {
    std::vector<Vec> b;
    for (int i = 0; i < r1; ++i) {
      for (int j = 0; j < k2; ++j) {
        if (detail::present(m2, j, t - m1[static_cast<std::size_t>(i)])) b.push_back(Vec{1} << (i * 4 + j));
      }
    }
    return b;
  };
  // U^p applied to a vector in degree t of C0 or C1.
  auto shift = [&](Vec v, int t, int p, bool in_c1) {
    Vec out = 0;
    for (int bit = 0; bit < 32; ++bit) {
      if (!(v & (Vec{1} << bit))) continue;
      const int owner = bit / 4;
      const int j = bit % 4;
      const int base = in_c1 ? t - m1[static_cast<std::size_t>(owner)] : t;
      if (detail::present(m2, j, base + p)) out ^= Vec{1} << bit;
    }
    return out;
  };
  // phi: r_i (x) e_j -> g_{i+1} (x) U^{n_i} e_j.
  auto phi = [&](Vec v, int t) {
    Vec out = 0;
    for (int bit = 0; bit < 32; ++bit) {
      if (!(v & (Vec{1} << bit))) continue;
      const int i = bit / 4;
      const int j = bit % 4;
      if (detail::present(m2, j, t)) out ^= Vec{1} << ((i + 1) * 4 + j);
    }
    return out;
  };

  std::vector<std::vector<Vec>> ker(D + 1), im(D + 1), c0(D + 1);
  for (int t = 0; t <= D; ++t) {
    const auto b1 = c1_basis(t);
    std::vector<Vec> images;
    for (Vec v : b1) images.push_back(phi(v, t));
    for (Vec combo : detail::kernel(images)) {
      Vec v = 0;
      for (std::size_t i = 0; i < b1.size(); ++i) {
        if (combo & (Vec{1} << i)) v ^= b1[i];
      }
      ker[static_cast<std::size_t>(t)].push_back(v);
    }
    im[static_cast<std::size_t>(t)] = images;
    c0[static_cast<std::size_t>(t)] = c0_basis(t);
  }

  auto r_ker = [&](int a, int b) {
    if (a < 0 || b > D) return 0;
    std::vector<Vec> v;
    for (Vec x : ker[static_cast<std::size_t>(a)]) v.push_back(shift(x, a, b - a, true));
    return detail::rank(v);
  };
  auto r_coker = [&](int a, int b) {
    if (a < 0 || b > D) return 0;
    std::vector<Vec> v = im[static_cast<std::size_t>(b)];
    const int base = detail::rank(v);
    for (Vec x : c0[static_cast<std::size_t>(a)]) v.push_back(shift(x, a, b - a, false));
    return detail::rank(v) - base;
  };

  Result res;
  auto collect = [&](auto&& rk) {
    for (int s = 0; s <= D; ++s) {
      for (int e = s; e <= D; ++e) {
        const int count = rk(s, e) - rk(s - 1, e) - rk(s, e + 1) + rk(s - 1, e + 1);
        for (int c = 0; c < count; ++c) {
          if (e == D) {
            ++res.free_summands;
          } else {
            res.torsion.push_back(e - s + 1);
          }
        }
      }
    }
  };
  collect(r_ker);
  collect(r_coker);
  std::sort(res.torsion.begin(), res.torsion.end());
  return res;
}

}  // namespace tor_oracle
