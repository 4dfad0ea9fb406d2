#pragma once

// Test-only oracle: the character table computed over the cyclotomic field
// Q(zeta_e) with exact rational arithmetic.  Same class algebra as the
// production builder, entirely different arithmetic route: no prime field,
// no modular lifting, no power-map Fourier inversion.  Eigenvalues of the
// class matrices are located by enumerating the finitely many possible
// central-character values n_i * (sum of d o_i-th roots of unity) / d.
//
// Meant for small groups (the acceptance gate runs it for orders <= 24).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "codeglab/classes.hpp"
#include "codeglab/cyclotomic.hpp"

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;
using RPoly = std::vector<Rat>;

inline RPoly rpoly_trim(RPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// divides exactly; both monic-friendly (divisor monic)
inline RPoly rpoly_divmod(RPoly a, const RPoly& m, RPoly* quot = nullptr) {
  a = rpoly_trim(std::move(a));
  RPoly q(a.size() > m.size() ? a.size() - m.size() + 1 : 1, Rat(0));
  while (a.size() >= m.size()) {
    Rat f = a.back() / m.back();
    std::size_t shift = a.size() - m.size();
    q[shift] = f;
    for (std::size_t i = 0; i < m.size(); ++i) a[i + shift] -= f * m[i];
    a = rpoly_trim(std::move(a));
    if (a.empty()) break;
  }
  if (quot) *quot = rpoly_trim(std::move(q));
  return a;
}

// cyclotomic polynomial Phi_e via (x^e - 1) / prod_{d|e, d<e} Phi_d
inline RPoly cyclotomic_polynomial(std::uint64_t e) {
  std::vector<RPoly> phi(e + 1);
  for (std::uint64_t n = 1; n <= e; ++n) {
    if (e % n != 0) continue;
    RPoly xn(n + 1, Rat(0));
    xn[0] = -1;
    xn[n] = 1;
    RPoly denom{Rat(1)};
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) denom = rpoly_mul(denom, phi[d]);
    RPoly q;
    RPoly rem = rpoly_divmod(xn, denom, &q);
    if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
    phi[n] = q;
  }
  return phi[e];
}

// Q(zeta_e) as Q[x]/Phi_e, elements are coefficient vectors of size deg Phi_e
class CycloField {
 public:
  explicit CycloField(std::uint64_t e) : e_(e), phi_(cyclotomic_polynomial(e)) {
    deg_ = phi_.size() - 1;
  }

  using El = RPoly;  // fixed size deg_

  std::uint64_t conductor() const { return e_; }
  std::size_t degree() const { return deg_; }

  El zero() const { return El(deg_, Rat(0)); }
  El from_rat(const Rat& r) const {
    El x = zero();
    if (deg_ > 0) x[0] = r;
    return x;
  }
  bool is_zero(const El& a) const {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }
  bool eq(const El& a, const El& b) const {
    for (std::size_t i = 0; i < deg_; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  El add(El a, const El& b) const {
    for (std::size_t i = 0; i < deg_; ++i) a[i] += b[i];
    return a;
  }
  El sub(El a, const El& b) const {
    for (std::size_t i = 0; i < deg_; ++i) a[i] -= b[i];
    return a;
  }
  El mul(const El& a, const El& b) const {
    RPoly c = rpoly_divmod(rpoly_mul(a, b), phi_);
    c.resize(deg_, Rat(0));
    return c;
  }
  El scale(El a, const Rat& r) const {
    for (auto& c : a) c *= r;
    return a;
  }
  // zeta_e^k
  El root_power(std::uint64_t k) const {
    k %= e_;
    RPoly xk(k + 1, Rat(0));
    xk[k] = 1;
    RPoly red = rpoly_divmod(std::move(xk), phi_);
    red.resize(deg_, Rat(0));
    return red;
  }
  El inv(const El& a) const {
    // extended euclid in Q[x] for gcd(a, phi) = 1
    RPoly r0 = phi_, r1 = rpoly_trim(a);
    if (r1.empty()) throw std::domain_error("inverse of zero");
    RPoly s0{Rat(0)}, s1{Rat(1)};  // coefficients of `a`
    while (true) {
      if (r1.size() == 1) break;
      // r0 = q*r1 + r2 with r1 made monic on the fly
      Rat lead = r1.back();
      RPoly r1m = r1;
      for (auto& c : r1m) c /= lead;
      RPoly q;
      RPoly r2 = rpoly_divmod(r0, r1m, &q);
      // account for the monic scaling: r0 = (q/lead)*r1 + r2
      for (auto& c : q) c /= lead;
      RPoly s2 = s0;
      RPoly qs1 = rpoly_mul(q, s1);
      s2.resize(std::max(s2.size(), qs1.size()), Rat(0));
      for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
      r0 = std::move(r1);
      r1 = rpoly_trim(std::move(r2));
      s0 = std::move(s1);
      s1 = rpoly_trim(std::move(s2));
      if (r1.empty()) throw std::logic_error("element not invertible");
    }
    // r1 is a nonzero constant c: inverse = s1 / c reduced mod phi
    Rat c = r1[0];
    RPoly out = rpoly_divmod(s1, phi_);
    out.resize(deg_, Rat(0));
    for (auto& x : out) x /= c;
    return out;
  }

  // rational part if the element is rational, else nullopt-like flag
  bool as_rational(const El& a, Rat& out) const {
    for (std::size_t i = 1; i < deg_; ++i)
      if (a[i] != 0) return false;
    out = deg_ > 0 ? a[0] : Rat(0);
    return true;
  }

 private:
  std::uint64_t e_;
  RPoly phi_;
  std::size_t deg_;
};

struct RationalTable {
  std::uint64_t exponent;
  std::vector<std::uint64_t> degrees;  // one per character, unsorted
  std::vector<std::vector<CycloField::El>> values;  // [character][class]
};

namespace rtdetail {

using codeglab::ClassData;
using El = CycloField::El;
using Vec = std::vector<El>;   // element of F^r
using Cols = std::vector<Vec>; // column basis

inline Vec mat_apply(const CycloField& F,
                     const std::vector<std::vector<std::uint64_t>>& m, const Vec& v) {
  const std::size_t r = v.size();
  Vec out(r, F.zero());
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      if (m[j][k] == 0) continue;
      out[j] = F.add(std::move(out[j]),
                     F.scale(v[k], Rat(static_cast<long long>(m[j][k]))));
    }
  return out;
}

// solve basis * x = y, basis full column rank
inline std::vector<El> solve_in_basis(const CycloField& F, const Cols& basis,
                                      const Vec& y) {
  const std::size_t r = y.size(), d = basis.size();
  std::vector<std::vector<El>> aug(r, std::vector<El>(d + 1, F.zero()));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis[j][i];
    aug[i][d] = y[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && F.is_zero(aug[piv][col])) ++piv;
    if (piv == r) continue;
    std::swap(aug[piv], aug[rank]);
    El inv = F.inv(aug[rank][col]);
    for (std::size_t j = col; j <= d; ++j) aug[rank][j] = F.mul(aug[rank][j], inv);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || F.is_zero(aug[i][col])) continue;
      El f = aug[i][col];
      for (std::size_t j = col; j <= d; ++j)
        aug[i][j] = F.sub(aug[i][j], F.mul(f, aug[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != d) throw std::logic_error("oracle basis not independent");
  for (std::size_t i = rank; i < r; ++i)
    if (!F.is_zero(aug[i][d])) throw std::logic_error("oracle system inconsistent");
  std::vector<El> x(d, F.zero());
  for (std::size_t rn = 0; rn < rank; ++rn) x[pivot_col[rn]] = aug[rn][d];
  return x;
}

inline std::vector<std::vector<El>> nullspace(const CycloField& F,
                                              std::vector<std::vector<El>> a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && F.is_zero(a[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    El inv = F.inv(a[rank][col]);
    for (std::size_t j = col; j < n; ++j) a[rank][j] = F.mul(a[rank][j], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || F.is_zero(a[i][col])) continue;
      El f = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        a[i][j] = F.sub(a[i][j], F.mul(f, a[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<El>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<El> v(n, F.zero());
    v[free] = F.from_rat(1);
    for (std::size_t rn = 0; rn < rank; ++rn)
      v[pivot_col[rn]] = F.sub(F.zero(), a[rn][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// characteristic polynomial via traces of powers and Newton's identities
inline std::vector<El> charpoly(const CycloField& F, const std::vector<std::vector<El>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<El>> pw = a;
  std::vector<El> tr(n + 1, F.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    El t = F.zero();
    for (std::size_t i = 0; i < n; ++i) t = F.add(std::move(t), pw[i][i]);
    tr[k] = t;
    if (k == n) break;
    std::vector<std::vector<El>> nx(n, std::vector<El>(n, F.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) {
        if (F.is_zero(pw[i][m])) continue;
        for (std::size_t j = 0; j < n; ++j)
          nx[i][j] = F.add(std::move(nx[i][j]), F.mul(pw[i][m], a[m][j]));
      }
    pw = std::move(nx);
  }
  // e_0 = 1; k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} tr_i
  std::vector<El> es(n + 1, F.zero());
  es[0] = F.from_rat(1);
  for (std::size_t k = 1; k <= n; ++k) {
    El acc = F.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      El term = F.mul(es[k - i], tr[i]);
      if (i % 2 == 0) term = F.sub(F.zero(), term);
      acc = F.add(std::move(acc), term);
    }
    es[k] = F.scale(acc, Rat(1, static_cast<unsigned>(k)));
  }
  // charpoly = sum_k (-1)^k e_k x^(n-k), monic
  std::vector<El> cp(n + 1, F.zero());
  for (std::size_t k = 0; k <= n; ++k) {
    El c = es[k];
    if (k % 2 == 1) c = F.sub(F.zero(), c);
    cp[n - k] = c;
  }
  return cp;
}

inline El poly_eval(const CycloField& F, const std::vector<El>& cp, const El& x) {
  El acc = F.zero();
  for (std::size_t i = cp.size(); i-- > 0;) {
    acc = F.add(F.mul(acc, x), cp[i]);
  }
  return acc;
}

}  // namespace rtdetail

inline RationalTable rational_character_table(const codeglab::ClassData& cd) {
  using namespace rtdetail;
  const std::size_t r = cd.num_classes();
  const std::uint64_t e = cd.exponent();
  const std::uint64_t n = cd.group_order();
  CycloField F(e);

  std::vector<std::vector<std::vector<std::uint64_t>>> mats(r);
  for (std::size_t i = 0; i < r; ++i) mats[i] = codeglab::class_matrix(cd, i);

  std::vector<std::uint64_t> deg_candidates;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) deg_candidates.push_back(d);

  std::vector<Cols> spaces(1);
  spaces[0].resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    spaces[0][j].assign(r, F.zero());
    spaces[0][j][j] = F.from_rat(1);
  }

  for (std::size_t i = 1; i < r; ++i) {
    bool all_one = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_one = false;
    if (all_one) break;

    // candidate eigenvalues of M_i: n_i/d * (sum of d roots of unity of
    // order dividing rep_order(i))
    const std::uint64_t o = cd.rep_order(i);
    std::map<RPoly, El> candidates;
    for (std::uint64_t d : deg_candidates) {
      // multisets of size d over exponents 0..o-1
      std::vector<std::uint64_t> pick(d, 0);
      for (;;) {
        El sum = F.zero();
        for (auto k : pick) sum = F.add(std::move(sum), F.root_power(k * (e / o)));
        El omega = F.scale(sum, Rat(static_cast<long long>(cd.size(i)),
                                    static_cast<long long>(d)));
        candidates.emplace(omega, omega);
        // next nondecreasing tuple
        std::size_t pos = d;
        while (pos > 0 && pick[pos - 1] == o - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t j2 = pos; j2 < d; ++j2) pick[j2] = pick[pos - 1];
      }
    }

    std::vector<Cols> next;
    for (auto& s : spaces) {
      const std::size_t d = s.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      std::vector<std::vector<El>> a(d, std::vector<El>(d, F.zero()));
      for (std::size_t j = 0; j < d; ++j) {
        auto y = mat_apply(F, mats[i], s[j]);
        auto x = solve_in_basis(F, s, y);
        for (std::size_t k = 0; k < d; ++k) a[k][j] = x[k];
      }
      auto cp = charpoly(F, a);
      std::size_t carved = 0;
      for (const auto& [key, omega] : candidates) {
        (void)key;
        if (!F.is_zero(poly_eval(F, cp, omega))) continue;
        auto shifted = a;
        for (std::size_t k = 0; k < d; ++k) shifted[k][k] = F.sub(shifted[k][k], omega);
        auto ns = nullspace(F, shifted);
        if (ns.empty()) continue;
        Cols piece;
        for (const auto& coeff : ns) {
          Vec v(r, F.zero());
          for (std::size_t j = 0; j < d; ++j) {
            if (F.is_zero(coeff[j])) continue;
            for (std::size_t k = 0; k < r; ++k)
              v[k] = F.add(std::move(v[k]), F.mul(coeff[j], s[j][k]));
          }
          piece.push_back(std::move(v));
        }
        carved += piece.size();
        next.push_back(std::move(piece));
      }
      if (carved != d) throw std::logic_error("oracle eigen split incomplete");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::logic_error("oracle split incomplete");

  RationalTable out;
  out.exponent = e;
  for (auto& s : spaces) {
    Vec w = s[0];
    if (F.is_zero(w[0])) throw std::logic_error("oracle: identity coordinate vanishes");
    El scale = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, scale);
    El norm = F.zero();
    for (std::size_t c = 0; c < r; ++c) {
      El prod = F.mul(w[c], w[cd.inverse_class(c)]);
      norm = F.add(std::move(norm),
                   F.scale(prod, Rat(1, static_cast<unsigned>(cd.size(c)))));
    }
    Rat norm_rat;
    if (!F.as_rational(norm, norm_rat) || norm_rat <= 0)
      throw std::logic_error("oracle: norm not a positive rational");
    Rat dsq = Rat(static_cast<long long>(n)) / norm_rat;
    Int num = boost::multiprecision::numerator(dsq);
    if (boost::multiprecision::denominator(dsq) != 1)
      throw std::logic_error("oracle: degree squared not integral");
    Int droot = boost::multiprecision::sqrt(num);
    if (droot * droot != num) throw std::logic_error("oracle: degree not a square root");
    std::uint64_t degree = static_cast<std::uint64_t>(droot);

    std::vector<El> vals(r, F.zero());
    for (std::size_t c = 0; c < r; ++c)
      vals[c] = F.scale(w[c], Rat(static_cast<long long>(degree),
                                  static_cast<long long>(cd.size(c))));
    out.degrees.push_back(degree);
    out.values.push_back(std::move(vals));
  }
  return out;
}

// canonical coefficient vector of a production-table value, for comparisons
inline CycloField::El to_field_element(const CycloField& F,
                                       const codeglab::CycloValue& v) {
  CycloField::El acc = F.zero();
  const std::uint64_t step = F.conductor() / v.order;
  for (std::size_t k = 0; k < v.mult.size(); ++k) {
    if (v.mult[k] == 0) continue;
    acc = F.add(std::move(acc),
                F.scale(F.root_power(k * step), Rat(v.mult[k])));
  }
  return acc;
}

}  // namespace oracle
