#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace codeglab {

namespace gfdetail {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

inline Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  a = poly_trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int lead = a.back();  // m is monic
    for (int i = 0; i <= dm; ++i) {
      a[static_cast<std::size_t>(i + shift)] =
          ((a[static_cast<std::size_t>(i + shift)] - lead * m[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // make b monic for the reduction step
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (t * b.back() % p == 1) {
        inv = t;
        break;
      }
    Poly bm = b;
    for (auto& c : bm) c = c * inv % p;
    Poly r = poly_mod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline Poly poly_sub(Poly a, const Poly& b, int p) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  return poly_trim(std::move(a));
}

inline bool poly_irreducible(const Poly& f, int p) {
  const unsigned k = static_cast<unsigned>(f.size()) - 1;
  if (k == 0) return false;
  Poly x{0, 1};
  Poly xr = poly_mod(x, f, p);
  // x^(p^k) == x mod f
  Poly xp = poly_powmod(x, ipow_u64(static_cast<std::uint64_t>(p), k), f, p);
  if (!poly_sub(xp, xr, p).empty()) return false;
  // no factor of degree k/q for prime q | k
  for (unsigned q = 2; q <= k; ++q) {
    if (k % q != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    Poly xq = poly_powmod(x, ipow_u64(static_cast<std::uint64_t>(p), k / q), f, p);
    Poly g = poly_gcd(f, poly_sub(xq, xr, p), p);
    if (static_cast<int>(poly_trim(g).size()) - 1 != 0) return false;
  }
  return true;
}

}  // namespace gfdetail

// The finite field with p^k elements, elements encoded as 0..q-1 by base-p
// digits of their polynomial coordinates.  The reducing polynomial defaults
// to the value-least monic irreducible of degree k, so constructions are
// reproducible; any other irreducible gives an isomorphic field and the
// corpus tests assert that the choice is invisible in group invariants.
class GF {
 public:
  static GF make(int p, unsigned k) { return GF(p, k, find_canonical(p, k)); }

  static GF make_with_poly(int p, unsigned k, std::uint64_t poly_value) {
    gfdetail::Poly f = decode_poly(p, k, poly_value);
    if (!gfdetail::poly_irreducible(f, p))
      throw std::invalid_argument("reducing polynomial not irreducible");
    return GF(p, k, f);
  }

  int characteristic() const { return p_; }
  unsigned extension_degree() const { return k_; }
  std::uint32_t size() const { return q_; }

  int add(int a, int b) const { return addt_[static_cast<std::size_t>(a) * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * q_ + b]; }
  int neg(int a) const { return negt_[static_cast<std::size_t>(a)]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return invt_[static_cast<std::size_t>(a)];
  }
  int pow(int a, std::uint64_t e) const {
    int r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // x -> x^(p^m)
  int frobenius(int a, unsigned m) const {
    return pow(a, gfdetail::ipow_u64(static_cast<std::uint64_t>(p_), m));
  }

  // least generator of the multiplicative group
  int primitive_element() const {
    for (std::uint32_t a = 1; a < q_; ++a) {
      std::uint32_t seen = 1;
      int x = static_cast<int>(a);
      while (x != 1) {
        x = mul(x, static_cast<int>(a));
        ++seen;
      }
      if (seen == q_ - 1) return static_cast<int>(a);
    }
    throw std::logic_error("no primitive element");
  }

 private:
  GF(int p, unsigned k, gfdetail::Poly f) : p_(p), k_(k) {
    q_ = static_cast<std::uint32_t>(gfdetail::ipow_u64(static_cast<std::uint64_t>(p), k));
    if (q_ > 4096) throw std::invalid_argument("field too large");
    addt_.resize(static_cast<std::size_t>(q_) * q_);
    mult_.resize(static_cast<std::size_t>(q_) * q_);
    negt_.resize(q_);
    invt_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      auto pa = decode(a);
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto pb = decode(b);
        gfdetail::Poly s(std::max(pa.size(), pb.size()), 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
          int v = 0;
          if (i < pa.size()) v += pa[i];
          if (i < pb.size()) v += pb[i];
          s[i] = v % p_;
        }
        addt_[static_cast<std::size_t>(a) * q_ + b] = encode(s);
        mult_[static_cast<std::size_t>(a) * q_ + b] =
            encode(gfdetail::poly_mulmod(pa, pb, f, p_));
      }
    }
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b)
        if (addt_[static_cast<std::size_t>(a) * q_ + b] == 0) negt_[a] = static_cast<int>(b);
      if (a != 0)
        for (std::uint32_t b = 1; b < q_; ++b)
          if (mult_[static_cast<std::size_t>(a) * q_ + b] == 1) invt_[a] = static_cast<int>(b);
    }
  }

  static gfdetail::Poly decode_poly(int p, unsigned k, std::uint64_t value) {
    gfdetail::Poly f(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<int>(value % static_cast<std::uint64_t>(p));
      value /= static_cast<std::uint64_t>(p);
    }
    f[k] = 1;
    return f;
  }

  static gfdetail::Poly find_canonical(int p, unsigned k) {
    const std::uint64_t bound = gfdetail::ipow_u64(static_cast<std::uint64_t>(p), k);
    for (std::uint64_t v = 0; v < bound; ++v) {
      gfdetail::Poly f = decode_poly(p, k, v);
      if (gfdetail::poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  gfdetail::Poly decode(std::uint32_t a) const {
    gfdetail::Poly f;
    while (a) {
      f.push_back(static_cast<int>(a % static_cast<std::uint32_t>(p_)));
      a /= static_cast<std::uint32_t>(p_);
    }
    return f;
  }

  int encode(const gfdetail::Poly& f) const {
    int v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p_ + f[i];
    return v;
  }

  int p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<int> addt_, mult_, negt_, invt_;
};

}  // namespace codeglab
