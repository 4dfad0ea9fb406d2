#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codeglab/gf.hpp"
#include "codeglab/perm.hpp"
#include "codeglab/permgroup.hpp"

namespace codeglab {

// ---------------------------------------------------------------------------
// Built-in group constructors.  Each one checks its closed order formula at
// build time; ClassData-level validation (simplicity, spectrum) happens in
// the corpus runner.
// ---------------------------------------------------------------------------

namespace corpusdetail {

inline void check_order(const PermGroup& g, const bigint& expected,
                        const std::string& who) {
  if (g.order() != expected)
    throw std::logic_error(who + ": built order " + g.order().str() +
                           ", expected " + expected.str());
}

inline bigint factorial(unsigned n) {
  bigint f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

using Mat2 = std::array<int, 4>;  // row-major [[a,b],[c,d]]

// row vector (u,v) times M
inline std::pair<int, int> apply2(const GF& f, int u, int v, const Mat2& m) {
  return {f.add(f.mul(u, m[0]), f.mul(v, m[2])),
          f.add(f.mul(u, m[1]), f.mul(v, m[3]))};
}

// perm of the q^2-1 nonzero row vectors, point (u,v) '-> index u*q+v skipping 0
inline Perm mat2_on_nonzero(const GF& f, const Mat2& m) {
  const std::uint32_t q = f.size();
  auto enc = [&](int u, int v) { return static_cast<std::size_t>(u) * q + v - 1; };
  Perm p;
  p.img.resize(static_cast<std::size_t>(q) * q - 1);
  for (std::uint32_t u = 0; u < q; ++u)
    for (std::uint32_t v = 0; v < q; ++v) {
      if (u == 0 && v == 0) continue;
      auto [x, y] = apply2(f, static_cast<int>(u), static_cast<int>(v), m);
      p.img[enc(static_cast<int>(u), static_cast<int>(v))] =
          static_cast<std::uint16_t>(enc(x, y));
    }
  return p;
}

// perm of all q^2 row vectors (affine carrier), point (u,v) '-> u*q+v
inline Perm mat2_on_vectors(const GF& f, const Mat2& m) {
  const std::uint32_t q = f.size();
  Perm p;
  p.img.resize(static_cast<std::size_t>(q) * q);
  for (std::uint32_t u = 0; u < q; ++u)
    for (std::uint32_t v = 0; v < q; ++v) {
      auto [x, y] = apply2(f, static_cast<int>(u), static_cast<int>(v), m);
      p.img[static_cast<std::size_t>(u) * q + v] =
          static_cast<std::uint16_t>(static_cast<std::size_t>(x) * q + y);
    }
  return p;
}

inline Perm translation_on_vectors(const GF& f, int du, int dv) {
  const std::uint32_t q = f.size();
  Perm p;
  p.img.resize(static_cast<std::size_t>(q) * q);
  for (std::uint32_t u = 0; u < q; ++u)
    for (std::uint32_t v = 0; v < q; ++v)
      p.img[static_cast<std::size_t>(u) * q + v] = static_cast<std::uint16_t>(
          static_cast<std::size_t>(f.add(static_cast<int>(u), du)) * q +
          f.add(static_cast<int>(v), dv));
  return p;
}

// Projective line: index v in 0..q-1 is the point (1 : v), index q is (0 : 1).
inline Perm mat2_on_projective_line(const GF& f, const Mat2& m) {
  const std::uint32_t q = f.size();
  auto norm = [&](int u, int v) -> std::size_t {
    if (u != 0) return static_cast<std::size_t>(f.mul(f.inv(u), v));
    return q;
  };
  Perm p;
  p.img.resize(q + 1);
  for (std::uint32_t v = 0; v < q; ++v) {
    auto [x, y] = apply2(f, 1, static_cast<int>(v), m);
    p.img[v] = static_cast<std::uint16_t>(norm(x, y));
  }
  auto [x, y] = apply2(f, 0, 1, m);
  p.img[q] = static_cast<std::uint16_t>(norm(x, y));
  return p;
}

inline std::vector<Mat2> sl2_matrices(const GF& f) {
  std::vector<Mat2> ms;
  ms.push_back({1, 1, 0, 1});
  ms.push_back({1, 0, 1, 1});
  int a = f.primitive_element();
  if (a != 1) ms.push_back({a, 0, 0, f.inv(a)});
  return ms;
}

}  // namespace corpusdetail

inline PermGroup symmetric_group(unsigned n) {
  if (n < 1 || n > 20) throw std::invalid_argument("symmetric: n in 1..20");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(perm_from_cycles(n, {{1, 2}}));
  if (n >= 3) {
    std::vector<int> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = static_cast<int>(i) + 1;
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  PermGroup g(n, gens);
  corpusdetail::check_order(g, corpusdetail::factorial(n), "symmetric");
  return g;
}

inline PermGroup alternating_group(unsigned n) {
  if (n < 1 || n > 20) throw std::invalid_argument("alternating: n in 1..20");
  std::vector<Perm> gens;
  if (n >= 3) gens.push_back(perm_from_cycles(n, {{1, 2, 3}}));
  if (n >= 4) {
    std::vector<int> cyc;
    if (n % 2 == 1) {
      for (unsigned i = 1; i <= n; ++i) cyc.push_back(static_cast<int>(i));
    } else {
      for (unsigned i = 2; i <= n; ++i) cyc.push_back(static_cast<int>(i));
    }
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  PermGroup g(n, gens);
  corpusdetail::check_order(g, n < 2 ? 1 : corpusdetail::factorial(n) / 2,
                            "alternating");
  return g;
}

inline PermGroup cyclic_group(unsigned n) {
  if (n < 1 || n > 65535) throw std::invalid_argument("cyclic: bad n");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = static_cast<int>(i) + 1;
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  PermGroup g(n, gens);
  corpusdetail::check_order(g, n, "cyclic");
  return g;
}

// order is the group order 2n, acting on the n-gon
inline PermGroup dihedral_group(unsigned order) {
  if (order < 6 || order % 2 != 0)
    throw std::invalid_argument("dihedral: order must be even and >= 6");
  unsigned n = order / 2;
  std::vector<int> rot(n);
  for (unsigned i = 0; i < n; ++i) rot[i] = static_cast<int>(i) + 1;
  Perm r = perm_from_cycles(n, {rot});
  Perm s = identity_perm(n);
  for (unsigned i = 0; i < n; ++i)
    s.img[i] = static_cast<std::uint16_t>((n - i) % n);
  PermGroup g(n, {r, s});
  corpusdetail::check_order(g, order, "dihedral");
  return g;
}

// regular action on {1,-1,i,-i,j,-j,k,-k}; generators: right mult by i and j
inline PermGroup quaternion8() {
  Perm mi(std::vector<std::uint16_t>{2, 3, 1, 0, 7, 6, 4, 5});
  Perm mj(std::vector<std::uint16_t>{4, 5, 6, 7, 1, 0, 3, 2});
  PermGroup g(8, {mi, mj});
  corpusdetail::check_order(g, 8, "quaternion8");
  unsigned involutions = 0;
  for (const auto& e : g.sorted_elements())
    if (!is_identity(e) && element_order(e) == 2) ++involutions;
  if (involutions != 1) throw std::logic_error("quaternion8: expected a unique involution");
  return g;
}

// SL_2(q) on the q^2-1 nonzero vectors of its natural plane
inline PermGroup special_linear_2(unsigned q,
                                  std::optional<std::uint64_t> poly = std::nullopt) {
  // factor q = p^k
  unsigned p = 0, k = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      unsigned m = q, kk = 0;
      while (m % d == 0) m /= d, ++kk;
      if (m != 1) throw std::invalid_argument("sl2: q must be a prime power");
      k = kk;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("sl2: q must be a prime power >= 2");
  GF f = poly ? GF::make_with_poly(static_cast<int>(p), k, *poly)
              : GF::make(static_cast<int>(p), k);
  std::vector<Perm> gens;
  for (const auto& m : corpusdetail::sl2_matrices(f))
    gens.push_back(corpusdetail::mat2_on_nonzero(f, m));
  PermGroup g(static_cast<std::size_t>(q) * q - 1, gens);
  corpusdetail::check_order(g, bigint(q) * (bigint(q) * q - 1), "sl2");
  return g;
}

// PSL_2(q) on the q+1 points of the projective line
inline PermGroup projective_special_linear_2(
    unsigned q, std::optional<std::uint64_t> poly = std::nullopt) {
  unsigned p = 0, k = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      unsigned m = q, kk = 0;
      while (m % d == 0) m /= d, ++kk;
      if (m != 1) throw std::invalid_argument("psl2: q must be a prime power");
      k = kk;
      break;
    }
  }
  if (p == 0 || q < 4) throw std::invalid_argument("psl2: q must be a prime power >= 4");
  GF f = poly ? GF::make_with_poly(static_cast<int>(p), k, *poly)
              : GF::make(static_cast<int>(p), k);
  std::vector<Perm> gens;
  for (const auto& m : corpusdetail::sl2_matrices(f))
    gens.push_back(corpusdetail::mat2_on_projective_line(f, m));
  PermGroup g(static_cast<std::size_t>(q) + 1, gens);
  bigint o = bigint(q) * (bigint(q) * q - 1) / (q % 2 == 0 ? 1 : 2);
  corpusdetail::check_order(g, o, "psl2");
  return g;
}

// GL_2(3) on the 8 nonzero vectors of F_3^2
inline PermGroup general_linear_2_3() {
  GF f = GF::make(3, 1);
  std::vector<Perm> gens;
  for (const auto& m : corpusdetail::sl2_matrices(f))
    gens.push_back(corpusdetail::mat2_on_nonzero(f, m));
  gens.push_back(corpusdetail::mat2_on_nonzero(f, {2, 0, 0, 1}));
  PermGroup g(8, gens);
  corpusdetail::check_order(g, 48, "gl2_3");
  return g;
}

// ASL_2(q) = translations + SL_2(q), acting on the q^2 vectors
inline PermGroup affine_special_linear_2(
    unsigned q, std::optional<std::uint64_t> poly = std::nullopt) {
  unsigned p = 0, k = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      unsigned m = q, kk = 0;
      while (m % d == 0) m /= d, ++kk;
      if (m != 1) throw std::invalid_argument("asl2: q must be a prime power");
      k = kk;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("asl2: q must be a prime power >= 2");
  GF f = poly ? GF::make_with_poly(static_cast<int>(p), k, *poly)
              : GF::make(static_cast<int>(p), k);
  std::vector<Perm> gens;
  gens.push_back(corpusdetail::translation_on_vectors(f, 1, 0));
  gens.push_back(corpusdetail::translation_on_vectors(f, 0, 1));
  for (const auto& m : corpusdetail::sl2_matrices(f))
    gens.push_back(corpusdetail::mat2_on_vectors(f, m));
  PermGroup g(static_cast<std::size_t>(q) * q, gens);
  corpusdetail::check_order(
      g, bigint(q) * q * q * (bigint(q) * q - 1), "asl2");
  return g;
}

// Semilinear family on the field with p^(p*m) elements:
// translations, the multiplicative subgroup of order (p^(p*m)-1)/(p^m-1),
// and x -> x^(p^m).  Order p^(p*m) * (p^(p*m)-1)/(p^m-1) * p.
inline PermGroup gamma_family(unsigned p, unsigned m,
                              std::optional<std::uint64_t> poly = std::nullopt) {
  bool prime = p >= 2;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime || m < 1) throw std::invalid_argument("gamma_family: p prime, m >= 1");
  unsigned deg = p * m;
  std::uint64_t qf = 1;
  for (unsigned i = 0; i < deg; ++i) {
    qf *= p;
    if (qf > 65535) throw std::invalid_argument("gamma_family: carrier too large");
  }
  GF f = poly ? GF::make_with_poly(static_cast<int>(p), deg, *poly)
              : GF::make(static_cast<int>(p), deg);
  const std::uint32_t q = f.size();
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  std::uint64_t h = (static_cast<std::uint64_t>(q) - 1) / (pm - 1);

  Perm trans;
  trans.img.resize(q);
  for (std::uint32_t x = 0; x < q; ++x)
    trans.img[x] = static_cast<std::uint16_t>(f.add(static_cast<int>(x), 1));
  int gen_h = f.pow(f.primitive_element(),
                    (static_cast<std::uint64_t>(q) - 1) / h);
  Perm mul;
  mul.img.resize(q);
  for (std::uint32_t x = 0; x < q; ++x)
    mul.img[x] = static_cast<std::uint16_t>(f.mul(static_cast<int>(x), gen_h));
  Perm frob;
  frob.img.resize(q);
  for (std::uint32_t x = 0; x < q; ++x)
    frob.img[x] = static_cast<std::uint16_t>(f.frobenius(static_cast<int>(x), m));

  PermGroup g(q, {trans, mul, frob});
  corpusdetail::check_order(g, bigint(q) * h * p, "gamma_family");
  return g;
}

inline PermGroup mathieu11() {
  Perm a = perm_from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  Perm b = perm_from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}});
  PermGroup g(11, {a, b});
  corpusdetail::check_order(g, 7920, "mathieu11");
  return g;
}

// PSL_3(4) on the 21 points of the projective plane over F_4.
// Built from SL_3(4) generators (two transvections plus the coordinate
// 3-cycle); scalars act trivially on projective points, so the permutation
// image is the simple quotient.
inline PermGroup projective_special_linear_3_4() {
  GF f = GF::make(2, 2);
  const std::uint32_t q = 4;
  using Vec3 = std::array<int, 3>;
  // canonical projective reps: first nonzero coordinate = 1
  auto normalize = [&](Vec3 v) -> Vec3 {
    for (int i = 0; i < 3; ++i)
      if (v[static_cast<std::size_t>(i)] != 0) {
        int s = f.inv(v[static_cast<std::size_t>(i)]);
        for (int j = 0; j < 3; ++j)
          v[static_cast<std::size_t>(j)] = f.mul(v[static_cast<std::size_t>(j)], s);
        return v;
      }
    throw std::logic_error("zero vector");
  };
  std::vector<Vec3> pts;
  std::vector<int> where(q * q * q, -1);
  auto enc = [&](const Vec3& v) {
    return (static_cast<std::uint32_t>(v[0]) * q + static_cast<std::uint32_t>(v[1])) * q +
           static_cast<std::uint32_t>(v[2]);
  };
  for (std::uint32_t code = 1; code < q * q * q; ++code) {
    Vec3 v{static_cast<int>(code / (q * q)), static_cast<int>(code / q % q),
           static_cast<int>(code % q)};
    Vec3 n = normalize(v);
    if (enc(n) == code) {
      where[code] = static_cast<int>(pts.size());
      pts.push_back(n);
    }
  }
  if (pts.size() != 21) throw std::logic_error("psl3_4: expected 21 points");

  using Mat3 = std::array<int, 9>;  // row-major
  auto act = [&](const Vec3& v, const Mat3& m) -> Vec3 {
    Vec3 r{0, 0, 0};
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int i = 0; i < 3; ++i)
        s = f.add(s, f.mul(v[static_cast<std::size_t>(i)],
                           m[static_cast<std::size_t>(3 * i + j)]));
      r[static_cast<std::size_t>(j)] = s;
    }
    return r;
  };
  auto to_perm = [&](const Mat3& m) {
    Perm p;
    p.img.resize(21);
    for (std::size_t i = 0; i < 21; ++i) {
      Vec3 w = normalize(act(pts[i], m));
      p.img[i] = static_cast<std::uint16_t>(where[enc(w)]);
    }
    return p;
  };
  int a = f.primitive_element();
  Mat3 e12_1{1, 1, 0, 0, 1, 0, 0, 0, 1};
  Mat3 e12_a{1, a, 0, 0, 1, 0, 0, 0, 1};
  Mat3 cyc{0, 0, 1, 1, 0, 0, 0, 1, 0};  // (u,v,w) -> (v,w,u)
  PermGroup g(21, {to_perm(e12_1), to_perm(e12_a), to_perm(cyc)});
  corpusdetail::check_order(g, 20160, "psl3_4");
  return g;
}

// C_a wr C_b: b blocks of a points; base rotation of the first block plus
// the block-advancing cycle.
inline PermGroup wreath_cyclic(unsigned a, unsigned b) {
  if (a < 2 || b < 2 || a * b > 65535)
    throw std::invalid_argument("wreath_cyclic: need a,b >= 2");
  const unsigned n = a * b;
  std::vector<int> block(a);
  for (unsigned i = 0; i < a; ++i) block[i] = static_cast<int>(i) + 1;
  Perm base = perm_from_cycles(n, {block});
  Perm shift;
  shift.img.resize(n);
  for (unsigned i = 0; i < n; ++i)
    shift.img[i] = static_cast<std::uint16_t>((i + a) % n);
  PermGroup g(n, {base, shift});
  bigint o = b;
  for (unsigned i = 0; i < b; ++i) o *= a;
  corpusdetail::check_order(g, o, "wreath_cyclic");
  return g;
}

// ---------------------------------------------------------------------------
// Builtin registry keyed by "name" or "name:arg1,arg2" specs.
// ---------------------------------------------------------------------------

inline PermGroup build_from_spec(const std::string& spec) {
  std::string name = spec;
  std::vector<unsigned> args;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty()) throw std::invalid_argument("bad builtin spec: " + spec);
      args.push_back(static_cast<unsigned>(std::stoul(tok)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument("builtin " + name + ": wrong argument count");
  };
  if (name == "symmetric") { want(1); return symmetric_group(args[0]); }
  if (name == "alternating") { want(1); return alternating_group(args[0]); }
  if (name == "cyclic") { want(1); return cyclic_group(args[0]); }
  if (name == "dihedral") { want(1); return dihedral_group(args[0]); }
  if (name == "quaternion8") { want(0); return quaternion8(); }
  if (name == "sl2") { want(1); return special_linear_2(args[0]); }
  if (name == "psl2") { want(1); return projective_special_linear_2(args[0]); }
  if (name == "gl2_3") { want(0); return general_linear_2_3(); }
  if (name == "asl2") { want(1); return affine_special_linear_2(args[0]); }
  if (name == "gamma_family") { want(2); return gamma_family(args[0], args[1]); }
  if (name == "mathieu11") { want(0); return mathieu11(); }
  if (name == "psl3_4") { want(0); return projective_special_linear_3_4(); }
  if (name == "wreath_cyclic") { want(2); return wreath_cyclic(args[0], args[1]); }
  throw std::invalid_argument("unknown builtin: " + name);
}

}  // namespace codeglab
