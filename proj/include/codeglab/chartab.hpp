#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "codeglab/classes.hpp"
#include "codeglab/cyclotomic.hpp"
#include "codeglab/modarith.hpp"

namespace codeglab {

// Exact complex character table.  Values are eigenvalue-multiset vectors
// over the zeta_o-th roots of unity where o is the order of the class
// representative; expand_to(e) gives the length-exponent form.
struct CharacterTable {
  std::uint64_t group_order = 1;
  std::uint64_t exponent = 1;
  std::uint64_t lifting_prime = 2;
  std::size_t num_classes = 1;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> rep_orders;
  std::vector<std::size_t> inverse_class;

  std::vector<std::uint64_t> degrees;               // per character, ascending first key
  std::vector<std::vector<CycloValue>> values;      // [character][class]
  std::vector<std::vector<std::size_t>> kernels;    // ascending class indices
  std::vector<std::uint64_t> kernel_orders;
  std::vector<std::uint64_t> codegrees;

  bool kernel_contains_class(std::size_t chi, std::size_t cls) const {
    const auto& k = kernels[chi];
    return std::binary_search(k.begin(), k.end(), cls);
  }
};

namespace chartabdetail {

using modarith::u64;

struct Split {
  std::vector<std::vector<u64>> basis;  // column vectors in F_l^r
};

inline std::vector<u64> mat_apply(const std::vector<std::vector<std::uint64_t>>& m,
                                  const std::vector<u64>& v, u64 p) {
  const std::size_t r = v.size();
  std::vector<u64> out(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    u64 acc = 0;
    for (std::size_t k = 0; k < r; ++k)
      acc = modarith::addmod(acc, modarith::mulmod(m[j][k] % p, v[k], p), p);
    out[j] = acc;
  }
  return out;
}

}  // namespace chartabdetail

inline CharacterTable dixon_schneider(const ClassData& cd) {
  using namespace modarith;
  CharacterTable t;
  const std::size_t r = cd.num_classes();
  t.group_order = cd.group_order();
  t.exponent = cd.exponent();
  t.num_classes = r;
  t.class_sizes = cd.sizes();
  t.rep_orders.resize(r);
  t.inverse_class.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    t.rep_orders[c] = cd.rep_order(c);
    t.inverse_class[c] = cd.inverse_class(c);
  }

  const u64 e = t.exponent;
  const u64 l = find_splitting_prime(e, t.group_order);
  t.lifting_prime = l;
  const u64 theta = powmod(primitive_root(l), (l - 1) / e, l);

  std::vector<std::vector<std::vector<std::uint64_t>>> cls_mats(r);
  for (std::size_t i = 0; i < r; ++i) cls_mats[i] = class_matrix(cd, i);

  // Split F_l^r into the common eigenspaces of the class matrices.
  // Matrices are taken in canonical class order and each subspace is split
  // by eigenvalue sorted ascending, so the decomposition is deterministic.
  std::vector<chartabdetail::Split> spaces(1);
  spaces[0].basis.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    spaces[0].basis[j].assign(r, 0);
    spaces[0].basis[j][j] = 1;
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool all_one = true;
    for (const auto& s : spaces)
      if (s.basis.size() > 1) all_one = false;
    if (all_one) break;
    std::vector<chartabdetail::Split> next;
    for (auto& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of M_i to the subspace
      Mat a(d, std::vector<u64>(d, 0));
      for (std::size_t j = 0; j < d; ++j) {
        auto y = chartabdetail::mat_apply(cls_mats[i], s.basis[j], l);
        auto x = solve_in_basis(s.basis, y, l);
        for (std::size_t k = 0; k < d; ++k) a[k][j] = x[k];
      }
      auto cp = charpoly(a, l);
      auto eigs = roots_in_fp(cp, l);
      std::size_t carved = 0;
      for (u64 lam : eigs) {
        Mat shifted = a;
        for (std::size_t k = 0; k < d; ++k) shifted[k][k] = submod(shifted[k][k], lam, l);
        auto ns = nullspace(shifted, l);
        if (ns.empty()) throw std::logic_error("eigenspace splitting failure");
        chartabdetail::Split piece;
        for (const auto& coeff : ns) {
          std::vector<u64> v(r, 0);
          for (std::size_t j = 0; j < d; ++j) {
            if (coeff[j] == 0) continue;
            for (std::size_t k = 0; k < r; ++k)
              v[k] = addmod(v[k], mulmod(coeff[j], s.basis[j][k], l), l);
          }
          piece.basis.push_back(std::move(v));
        }
        carved += piece.basis.size();
        next.push_back(std::move(piece));
      }
      if (carved != d) throw std::logic_error("eigenspace splitting failure");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::logic_error("eigenspace splitting failure");

  // Central characters, degrees, and exact values per one-dimensional space.
  std::vector<u64> inv_size(r);
  for (std::size_t c = 0; c < r; ++c) inv_size[c] = invmod(t.class_sizes[c] % l, l);
  std::uint64_t isqrt_cap = 1;
  while ((isqrt_cap + 1) * (isqrt_cap + 1) <= t.group_order) ++isqrt_cap;

  struct Row {
    std::uint64_t degree;
    std::vector<CycloValue> vals;
  };
  std::vector<Row> rows;
  rows.reserve(r);
  for (const auto& s : spaces) {
    if (s.basis.size() != 1) throw std::logic_error("eigenspace splitting failure");
    std::vector<u64> w = s.basis[0];
    if (w[0] == 0) throw std::logic_error("central character vanishes at the identity");
    const u64 scale = invmod(w[0], l);
    for (auto& x : w) x = mulmod(x, scale, l);

    u64 tsum = 0;
    for (std::size_t c = 0; c < r; ++c)
      tsum = addmod(tsum, mulmod(mulmod(w[c], w[t.inverse_class[c]], l), inv_size[c], l), l);
    if (tsum == 0) throw std::logic_error("degree recovery: zero norm");
    const u64 dsq = mulmod(t.group_order % l, invmod(tsum, l), l);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= isqrt_cap; ++d)
      if (d * d == dsq) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw std::logic_error("degree recovery: no integer square-root lift");

    Row row;
    row.degree = degree;
    row.vals.resize(r);
    for (std::size_t c = 0; c < r; ++c) {
      const u64 o = t.rep_orders[c];
      const u64 theta_o = powmod(theta, e / o, l);
      const u64 theta_o_inv = invmod(theta_o, l);
      // chi(rep^s) mod l for s in [0, o)
      std::vector<u64> powvals(o);
      for (u64 s = 0; s < o; ++s) {
        std::size_t pc = cd.power_class(c, s);
        powvals[s] = mulmod(mulmod(degree % l, w[pc], l), inv_size[pc], l);
      }
      CycloValue v;
      v.order = o;
      v.mult.resize(o);
      const u64 inv_o = invmod(o % l, l);
      std::uint64_t total = 0;
      for (u64 k = 0; k < o; ++k) {
        u64 acc = 0, root = 1;  // root = theta_o^{-s k}
        const u64 stepk = powmod(theta_o_inv, k, l);
        for (u64 s = 0; s < o; ++s) {
          acc = addmod(acc, mulmod(powvals[s], root, l), l);
          root = mulmod(root, stepk, l);
        }
        u64 m = mulmod(acc, inv_o, l);
        if (m > degree)
          throw std::logic_error("value lift out of range");
        v.mult[k] = static_cast<std::int64_t>(m);
        total += m;
      }
      if (total != degree) throw std::logic_error("value multiplicities do not sum to the degree");
      row.vals[c] = std::move(v);
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t c = 0; c < r; ++c) {
      if (a.vals[c].mult != b.vals[c].mult) return a.vals[c].mult > b.vals[c].mult;
    }
    return false;
  });

  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.vals));
  }

  // kernels, kernel orders, codegrees
  for (std::size_t chi = 0; chi < r; ++chi) {
    std::vector<std::size_t> ker;
    std::uint64_t ker_order = 0;
    for (std::size_t c = 0; c < r; ++c) {
      if (is_rational_value(t.values[chi][c], static_cast<std::int64_t>(t.degrees[chi]))) {
        ker.push_back(c);
        ker_order += t.class_sizes[c];
      }
    }
    if (t.group_order % ker_order != 0)
      throw std::logic_error("kernel order does not divide the group order");
    const std::uint64_t index = t.group_order / ker_order;
    if (index % t.degrees[chi] != 0)
      throw std::logic_error("codegree not integral");
    t.kernels.push_back(std::move(ker));
    t.kernel_orders.push_back(ker_order);
    t.codegrees.push_back(index / t.degrees[chi]);
  }

  // --- table invariants ---
  if (t.degrees.size() != r) throw std::logic_error("character count != class count");
  {
    unsigned __int128 sum = 0;
    for (auto d : t.degrees) sum += static_cast<unsigned __int128>(d) * d;
    if (sum != t.group_order) throw std::logic_error("sum of squared degrees != group order");
  }
  if (t.degrees[0] != 1) throw std::logic_error("first row is not linear");
  for (std::size_t c = 0; c < r; ++c)
    if (!is_rational_value(t.values[0][c], 1))
      throw std::logic_error("first row is not the trivial character");
  // row orthogonality, exact over Z[zeta_e]
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      CycloAccumulator acc(e);
      for (std::size_t c = 0; c < r; ++c)
        acc.add_product(t.values[i][c], t.values[j][t.inverse_class[c]],
                        static_cast<std::int64_t>(t.class_sizes[c]));
      if (!acc.is_integer(i == j ? static_cast<std::int64_t>(t.group_order) : 0))
        throw std::logic_error("row orthogonality violated");
    }
  // column orthogonality against the identity column
  for (std::size_t c = 1; c < r; ++c) {
    CycloAccumulator acc(e);
    for (std::size_t chi = 0; chi < r; ++chi)
      acc.add_value(t.values[chi][c], static_cast<std::int64_t>(t.degrees[chi]));
    if (!acc.is_zero())
      throw std::logic_error("identity-column orthogonality violated");
  }
  // kernel classes close under multiplication of representatives
  for (std::size_t chi = 0; chi < r; ++chi) {
    for (std::size_t a : t.kernels[chi])
      for (std::size_t b : t.kernels[chi]) {
        std::size_t c = cd.class_of(cd.rep(a) * cd.rep(b));
        if (!t.kernel_contains_class(chi, c))
          throw std::logic_error("kernel classes not closed");
      }
  }
  return t;
}

// One character per line: degree, codegree, kernel class indices
// (comma-separated, 0-based), then for every class in canonical order the
// exponent-length multiplicity vector; all base-10, tab-separated.
inline std::string dump_table(const CharacterTable& t) {
  std::ostringstream os;
  for (std::size_t chi = 0; chi < t.degrees.size(); ++chi) {
    os << t.degrees[chi] << '\t' << t.codegrees[chi] << '\t';
    for (std::size_t k = 0; k < t.kernels[chi].size(); ++k) {
      if (k) os << ',';
      os << t.kernels[chi][k];
    }
    for (std::size_t c = 0; c < t.num_classes; ++c) {
      auto full = expand_to(t.values[chi][c], t.exponent);
      for (auto v : full) os << '\t' << v;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace codeglab
