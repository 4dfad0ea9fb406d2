#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace codeglab {
namespace modarith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("invmod of zero");
  return powmod(a % p, p - 2, p);  // p prime
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// smallest prime l with l ≡ 1 (mod e) and l > lower
inline u64 find_splitting_prime(u64 e, u64 lower) {
  const u64 max_k = 100'000'000 / std::max<u64>(e, 1) + 1'000'000;
  u64 k = lower / e + 1;
  for (u64 i = 0; i < max_k; ++i, ++k) {
    u64 cand = e * k + 1;
    if (cand > lower && is_prime(cand)) return cand;
  }
  throw std::runtime_error("no splitting prime found below search bound");
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline u64 primitive_root(u64 p) {
  auto qs = prime_divisors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

// --- polynomials over F_p, coefficients low-degree first -------------------

using Poly = std::vector<u64>;

inline Poly ptrim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly pmul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  return c;
}

inline Poly pmod(Poly a, const Poly& m, u64 p) {
  a = ptrim(std::move(a));
  const std::size_t dm = m.size() - 1;
  u64 lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    u64 f = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[i + shift] = submod(a[i + shift], mulmod(f, m[i], p), p);
    a = ptrim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

inline Poly pgcd(Poly a, Poly b, u64 p) {
  a = ptrim(std::move(a));
  b = ptrim(std::move(b));
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

inline Poly ppowmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// All roots in F_p of a polynomial that splits into linear factors over F_p.
// Deterministic: the splitting element runs through x+0, x+1, ...; the result
// is sorted ascending.
inline std::vector<u64> roots_in_fp(Poly f, u64 p) {
  f = ptrim(std::move(f));
  if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<u64> out;
  // distinct-root part: gcd(f, x^p - x)
  Poly xp = ppowmod(Poly{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = submod(xp[1], 1, p);
  Poly g = pgcd(f, ptrim(std::move(xp)), p);
  if (g.empty()) g = f;  // f divides x^p - x
  std::vector<Poly> stack{std::move(g)};
  u64 shift = 0;
  while (!stack.empty()) {
    Poly h = std::move(stack.back());
    stack.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      // monic x + c -> root -c
      u64 c = mulmod(h[0], invmod(h[1], p), p);
      out.push_back(c == 0 ? 0 : p - c);
      continue;
    }
    if (h[0] == 0) {
      out.push_back(0);
      Poly h2(h.begin() + 1, h.end());
      stack.push_back(ptrim(std::move(h2)));
      continue;
    }
    // split by the quadratic character of x + shift
    bool split_found = false;
    for (; shift < 100000; ++shift) {
      Poly lin{shift, 1};
      Poly t = ppowmod(lin, (p - 1) / 2, h, p);
      if (t.empty()) continue;
      t[0] = submod(t[0], 1, p);
      Poly d = pgcd(h, ptrim(std::move(t)), p);
      if (!d.empty() && d.size() > 1 && d.size() < h.size()) {
        // h = d * (h/d); push both
        Poly q;
        {
          // exact division h / d
          Poly rem = h;
          q.assign(h.size() - d.size() + 1, 0);
          u64 inv = invmod(d.back(), p);
          for (std::size_t k = q.size(); k-- > 0;) {
            u64 coef = mulmod(rem[k + d.size() - 1], inv, p);
            q[k] = coef;
            if (coef == 0) continue;
            for (std::size_t i = 0; i < d.size(); ++i)
              rem[k + i] = submod(rem[k + i], mulmod(coef, d[i], p), p);
          }
        }
        stack.push_back(std::move(d));
        stack.push_back(ptrim(std::move(q)));
        split_found = true;
        ++shift;
        break;
      }
    }
    if (!split_found) throw std::logic_error("root splitting did not converge");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- dense matrices over F_p ------------------------------------------------

using Mat = std::vector<std::vector<u64>>;

inline Mat mat_identity(std::size_t n) {
  Mat m(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// characteristic polynomial via Hessenberg reduction; monic, low-first
inline Poly charpoly(Mat a, u64 p) {
  const std::size_t n = a.size();
  // reduce to upper Hessenberg by similarity transforms
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k]);
    }
    u64 inv = invmod(a[k][k - 1], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k - 1] == 0) continue;
      u64 f = mulmod(a[i][k - 1], inv, p);
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = submod(a[i][j], mulmod(f, a[k][j], p), p);
      for (std::size_t j = 0; j < n; ++j)
        a[j][k] = addmod(a[j][k], mulmod(f, a[j][i], p), p);
    }
  }
  // char polys of leading principal Hessenberg blocks
  std::vector<Poly> c(n + 1);
  c[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    // c_m = (x - a[m-1][m-1]) c_{m-1} - sum over subdiagonal products
    Poly t(c[m - 1].size() + 1, 0);
    for (std::size_t i = 0; i < c[m - 1].size(); ++i) {
      t[i + 1] = addmod(t[i + 1], c[m - 1][i], p);
      t[i] = submod(t[i], mulmod(a[m - 1][m - 1], c[m - 1][i], p), p);
    }
    u64 prod = 1;
    for (std::size_t k = 1; k < m; ++k) {
      prod = mulmod(prod, a[m - k][m - k - 1], p);
      if (prod == 0) break;
      u64 coef = mulmod(a[m - k - 1][m - 1], prod, p);
      if (coef == 0) continue;
      for (std::size_t i = 0; i < c[m - k - 1].size(); ++i)
        t[i] = submod(t[i], mulmod(coef, c[m - k - 1][i], p), p);
    }
    c[m] = std::move(t);
  }
  return c[n];
}

// basis of the right nullspace, deterministic echelon form
inline std::vector<std::vector<u64>> nullspace(Mat a, u64 p) {
  if (a.empty()) return {};
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    u64 inv = invmod(a[rank][col], p);
    for (std::size_t j = col; j < cols; ++j) a[rank][j] = mulmod(a[rank][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      u64 f = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = submod(a[i][j], mulmod(f, a[rank][j], p), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = a[r][free] == 0 ? 0 : p - a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// solve B x = y for full-column-rank B (columns basis_cols), y a column
inline std::vector<u64> solve_in_basis(const std::vector<std::vector<u64>>& basis_cols,
                                       const std::vector<u64>& y, u64 p) {
  const std::size_t r = y.size(), d = basis_cols.size();
  Mat aug(r, std::vector<u64>(d + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis_cols[j][i];
    aug[i][d] = y[i];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < d && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && aug[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(aug[piv], aug[rank]);
    u64 inv = invmod(aug[rank][col], p);
    for (std::size_t j = col; j <= d; ++j) aug[rank][j] = mulmod(aug[rank][j], inv, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || aug[i][col] == 0) continue;
      u64 f = aug[i][col];
      for (std::size_t j = col; j <= d; ++j)
        aug[i][j] = submod(aug[i][j], mulmod(f, aug[rank][j], p), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != d) throw std::logic_error("solve_in_basis: basis not independent");
  for (std::size_t i = rank; i < r; ++i)
    if (aug[i][d] != 0) throw std::logic_error("solve_in_basis: inconsistent system");
  std::vector<u64> x(d, 0);
  for (std::size_t rn = 0; rn < rank; ++rn) x[pivot_col[rn]] = aug[rn][d];
  return x;
}

}  // namespace modarith
}  // namespace codeglab
