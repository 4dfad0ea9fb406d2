#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codeglab/classes.hpp"
#include "codeglab/permgroup.hpp"

namespace codeglab {

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

namespace structuredetail {

struct ElemSet {
  std::unordered_set<Perm, PermHash> set;
  explicit ElemSet(const std::vector<Perm>& v) : set(v.begin(), v.end()) {}
  bool contains(const Perm& p) const { return set.count(p) != 0; }
};

}  // namespace structuredetail

// A Sylow p-subgroup, grown from a p-element of maximal order among class
// representatives by extension inside successive normalizers.  The search
// is exhaustive over the enumerated elements, and the result is checked
// against the p-part of the order, so a wrong search can only abort, not
// mislead.
inline PermGroup sylow_subgroup(const ClassData& cd, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("sylow: p must be prime");
  const PermGroup& g = cd.group();
  const std::uint64_t target = p_part(cd.group_order(), p);
  if (target == 1) return PermGroup(g.degree(), {});

  std::vector<Perm> pgens;
  {
    std::uint64_t best = 1;
    std::size_t best_class = 0;
    for (std::size_t c = 0; c < cd.num_classes(); ++c) {
      std::uint64_t o = cd.rep_order(c);
      if (is_p_power(o, p) && o > best) {
        best = o;
        best_class = c;
      }
    }
    pgens.push_back(cd.rep(best_class));
  }
  PermGroup pg(g.degree(), pgens);
  while (pg.order() != target) {
    auto pelems = pg.sorted_elements();
    structuredetail::ElemSet pset(pelems);
    // extend by the least p-element of the normalizer outside the subgroup
    bool extended = false;
    for (const auto& x : cd.elements()) {
      if (pset.contains(x)) continue;
      if (!is_p_power(element_order(x), p)) continue;
      bool normalizes = true;
      for (const auto& h : pgens)
        if (!pset.contains(conjugate(h, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      pgens.push_back(x);
      pg = PermGroup(g.degree(), pgens);
      extended = true;
      break;
    }
    if (!extended) throw std::logic_error("sylow extension stalled");
  }
  if (pg.order() != target) throw std::logic_error("sylow order check failed");
  return pg;
}

// O^{p'}(G): the normal closure of a Sylow p-subgroup; equivalently the
// smallest normal subgroup of p'-index.
inline PermGroup p_residual(const ClassData& cd, std::uint64_t p) {
  const PermGroup& g = cd.group();
  PermGroup syl = sylow_subgroup(cd, p);
  PermGroup n = normal_closure(g, syl.generators());
  bigint index = g.order() / n.order();
  if (index % p == 0) throw std::logic_error("p-residual index divisible by p");
  return n;
}

// O_p(G): the elements whose entire conjugacy class lies in one Sylow
// p-subgroup; equals the intersection of all Sylow p-subgroups.
inline PermGroup p_core(const ClassData& cd, std::uint64_t p) {
  const PermGroup& g = cd.group();
  PermGroup syl = sylow_subgroup(cd, p);
  if (syl.is_trivial()) return syl;
  structuredetail::ElemSet pset(syl.sorted_elements());
  std::vector<bool> class_inside(cd.num_classes(), true);
  for (std::size_t i = 0; i < cd.elements().size(); ++i) {
    std::size_t c = cd.class_of_index(i);
    if (class_inside[c] && !pset.contains(cd.element(i))) class_inside[c] = false;
  }
  std::vector<Perm> members;
  for (std::size_t i = 0; i < cd.elements().size(); ++i)
    if (class_inside[cd.class_of_index(i)] && !is_identity(cd.element(i)))
      members.push_back(cd.element(i));
  PermGroup core(g.degree(), members);
  if (!is_p_power(core.order_u64(), p) && !core.is_trivial())
    throw std::logic_error("p-core is not a p-group");
  return core;
}

// right-coset action of g on the cosets of a normal (or any) subgroup n;
// cosets are canonicalized by their least element
struct Quotient {
  PermGroup group;  // fresh degree = coset count
  std::vector<Perm> coset_reps;              // canonical representatives
  std::shared_ptr<std::vector<Perm>> sub_elements;  // sorted elements of n
  std::unordered_map<Perm, std::size_t, PermHash> coset_index;

  std::size_t index_of(const Perm& x) const {
    Perm best = (*sub_elements)[0] * x;
    for (const auto& n : *sub_elements) {
      Perm cand = n * x;
      if (cand < best) best = cand;
    }
    auto it = coset_index.find(best);
    if (it == coset_index.end())
      throw std::invalid_argument("element not in the acted-on group");
    return it->second;
  }

  Perm map(const Perm& x) const {
    Perm img;
    img.img.resize(coset_reps.size());
    for (std::size_t i = 0; i < coset_reps.size(); ++i)
      img.img[i] = static_cast<std::uint16_t>(index_of(coset_reps[i] * x));
    return img;
  }
};

inline bool is_normal_in(const PermGroup& g, const PermGroup& n) {
  if (!g.contains_group(n)) return false;
  for (const auto& x : g.generators())
    for (const auto& h : n.generators())
      if (!n.contains(conjugate(h, x))) return false;
  return true;
}

inline Quotient quotient(const PermGroup& g, const PermGroup& n) {
  if (!g.contains_group(n)) throw std::invalid_argument("quotient: N not a subgroup");
  if (!is_normal_in(g, n)) throw std::invalid_argument("quotient: N not normal");
  Quotient q;
  q.sub_elements = std::make_shared<std::vector<Perm>>(n.sorted_elements());
  const auto& nel = *q.sub_elements;
  auto canonical = [&](const Perm& x) {
    Perm best = nel[0] * x;
    for (const auto& m : nel) {
      Perm cand = m * x;
      if (cand < best) best = cand;
    }
    return best;
  };
  // breadth-first coset enumeration
  q.coset_reps.push_back(canonical(identity_perm(g.degree())));
  q.coset_index.emplace(q.coset_reps[0], 0);
  for (std::size_t head = 0; head < q.coset_reps.size(); ++head) {
    for (const auto& x : g.generators()) {
      Perm c = canonical(q.coset_reps[head] * x);
      if (!q.coset_index.count(c)) {
        q.coset_index.emplace(c, q.coset_reps.size());
        q.coset_reps.push_back(c);
      }
    }
  }
  const std::size_t m = q.coset_reps.size();
  if (m > 65535) throw std::runtime_error("quotient degree too large");
  std::vector<Perm> qgens;
  for (const auto& x : g.generators()) {
    Perm img;
    img.img.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      img.img[i] = static_cast<std::uint16_t>(
          q.coset_index.at(canonical(q.coset_reps[i] * x)));
    qgens.push_back(img);
  }
  q.group = PermGroup(std::max<std::size_t>(m, 1), qgens);
  if (q.group.order() * n.order() != g.order())
    throw std::logic_error("quotient order times kernel order != group order");
  // epimorphism spot checks: generator pairs multiply compatibly and the
  // kernel of the action is exactly n
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j)
      if (q.map(gs[i] * gs[j]) != q.map(gs[i]) * q.map(gs[j]))
        throw std::logic_error("quotient map is not a homomorphism");
  for (const auto& h : n.generators())
    if (!is_identity(q.map(h))) throw std::logic_error("kernel not contained in N");
  return q;
}

inline PermGroup centralizer(const ClassData& cd, const Perm& x) {
  if (!cd.group_contains(x)) throw std::invalid_argument("centralizer: element not in group");
  std::vector<Perm> members;
  for (const auto& y : cd.elements())
    if (!is_identity(y) && x * y == y * x) members.push_back(y);
  return PermGroup(cd.group().degree(), members);
}

inline PermGroup center(const ClassData& cd) {
  std::vector<Perm> members;
  const auto& gens = cd.group().generators();
  for (const auto& y : cd.elements()) {
    if (is_identity(y)) continue;
    bool central = true;
    for (const auto& g : gens)
      if (y * g != g * y) {
        central = false;
        break;
      }
    if (central) members.push_back(y);
  }
  return PermGroup(cd.group().degree(), members);
}

// Minimal normal subgroups: inclusion-minimal normal closures of the
// prime-order class representatives.
inline std::vector<PermGroup> minimal_normal_subgroups(const ClassData& cd) {
  const PermGroup& g = cd.group();
  std::vector<PermGroup> cands;
  for (std::size_t c = 1; c < cd.num_classes(); ++c) {
    if (!is_prime_u64(cd.rep_order(c))) continue;
    PermGroup h = normal_closure(g, {cd.rep(c)});
    bool dup = false;
    for (const auto& other : cands)
      if (other.same_group(h)) {
        dup = true;
        break;
      }
    if (!dup) cands.push_back(std::move(h));
  }
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size(); ++j) {
      if (i == j) continue;
      if (cands[j].order() < cands[i].order() && cands[i].contains_group(cands[j]))
        minimal = false;
    }
    if (minimal) out.push_back(cands[i]);
  }
  return out;
}

// O_{p'}(G): if some minimal normal subgroup is a p'-group, pick the one
// with the least nontrivial element, pull back the p'-core of the quotient;
// otherwise trivial.  Induction on the order.
inline PermGroup p_prime_core(const ClassData& cd, std::uint64_t p) {
  const PermGroup& g = cd.group();
  auto mns = minimal_normal_subgroups(cd);
  const PermGroup* pick = nullptr;
  Perm pick_key;
  for (const auto& m : mns) {
    if (m.order() % p == 0) continue;
    Perm least = m.sorted_elements()[1];  // first nontrivial
    if (!pick || least < pick_key) {
      pick = &m;
      pick_key = least;
    }
  }
  if (!pick) return PermGroup(g.degree(), {});
  Quotient q = quotient(g, *pick);
  ClassData qcd(q.group);
  PermGroup w = p_prime_core(qcd, p);
  // preimage: generated by the kernel and representatives of the cosets in w
  std::vector<Perm> gens = pick->generators();
  structuredetail::ElemSet wset(w.sorted_elements());
  for (std::size_t i = 0; i < q.coset_reps.size(); ++i) {
    // coset i belongs to w iff the quotient element moving coset 0 to i ...
    // simpler: test membership of the quotient image of the representative
    if (wset.contains(q.map(q.coset_reps[i]))) gens.push_back(q.coset_reps[i]);
  }
  PermGroup core(g.degree(), gens);
  if (core.order() % p == 0) throw std::logic_error("p'-core divisible by p");
  if (!is_normal_in(g, core)) throw std::logic_error("p'-core not normal");
  return core;
}

inline bool is_simple(const ClassData& cd) {
  const PermGroup& g = cd.group();
  if (g.order() <= 1) return false;
  for (std::size_t c = 1; c < cd.num_classes(); ++c) {
    PermGroup h = normal_closure(g, {cd.rep(c)});
    if (h.order() != g.order()) return false;
  }
  return true;
}

inline bool is_quasisimple(const ClassData& cd) {
  const PermGroup& g = cd.group();
  if (!is_perfect(g)) return false;
  PermGroup z = center(cd);
  Quotient q = quotient(g, z);
  if (!q.group.order_fits(kEnumerationCap)) return false;
  ClassData qcd(q.group);
  return is_simple(qcd);
}

// T.I. test: over the cosets of the normalizer, every conjugate of h meets
// h trivially or coincides with it.
inline bool is_ti_subgroup(const ClassData& cd, const PermGroup& h) {
  const PermGroup& g = cd.group();
  if (!g.contains_group(h)) throw std::invalid_argument("ti: H not a subgroup");
  if (h.is_trivial() || h.order() == g.order()) return true;
  auto helems = h.sorted_elements();
  structuredetail::ElemSet hset(helems);
  // normalizer elements
  std::vector<Perm> normalizer;
  for (const auto& x : cd.elements()) {
    bool normalizes = true;
    for (const auto& hh : h.generators())
      if (!hset.contains(conjugate(hh, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) normalizer.push_back(x);
  }
  std::unordered_set<Perm, PermHash> visited;
  for (const auto& x : cd.elements()) {
    if (visited.count(x)) continue;
    for (const auto& n : normalizer) visited.insert(n * x);
    // conjugate subgroup H^x
    std::size_t inter = 0;
    for (const auto& hh : helems)
      if (hset.contains(conjugate(hh, x))) ++inter;
    if (inter != 1 && inter != helems.size()) return false;
  }
  return true;
}

// Frobenius test with a designated kernel: every nontrivial element of k
// has its centralizer inside k.  Checked on the class representatives of g
// that lie in k.  Precondition violations throw, they are not "false".
inline bool is_frobenius_with_kernel(const ClassData& cd, const PermGroup& k) {
  const PermGroup& g = cd.group();
  if (!g.contains_group(k)) throw std::invalid_argument("frobenius: K not a subgroup");
  if (!is_normal_in(g, k)) throw std::invalid_argument("frobenius: K not normal");
  if (k.is_trivial() || k.order() == g.order())
    throw std::invalid_argument("frobenius: K must be proper and nontrivial");
  for (std::size_t c = 1; c < cd.num_classes(); ++c) {
    const Perm& rep = cd.rep(c);
    if (!k.contains(rep)) continue;
    for (const auto& y : cd.elements())
      if (y * rep == rep * y && !k.contains(y)) return false;
  }
  // consequence check: kernel order and complement order must be coprime
  std::uint64_t ko = k.order_u64();
  std::uint64_t co = cd.group_order() / ko;
  if (std::gcd(ko, co) != 1)
    throw std::logic_error("frobenius kernel order not coprime to its index");
  return true;
}

// one conjugation orbit on the nonidentity elements of v?
struct TransitivityReport {
  bool transitive = false;
  std::vector<std::uint64_t> orbit_sizes;  // sorted ascending
};

inline TransitivityReport acts_transitively_on_nonidentity(const PermGroup& g,
                                                           const PermGroup& v) {
  if (!is_normal_in(g, v))
    throw std::invalid_argument("transitivity: V not normal");
  TransitivityReport out;
  auto velems = v.sorted_elements();
  std::unordered_map<Perm, bool, PermHash> seen;
  for (const auto& x : velems) seen.emplace(x, false);
  for (const auto& x : velems) {
    if (is_identity(x) || seen.at(x)) continue;
    std::vector<Perm> frontier{x};
    seen[x] = true;
    std::uint64_t size = 0;
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& y : frontier) {
        ++size;
        for (const auto& gg : g.generators()) {
          Perm z = conjugate(y, gg);
          auto it = seen.find(z);
          if (it == seen.end())
            throw std::logic_error("conjugation left the normal subgroup");
          if (!it->second) {
            it->second = true;
            next.push_back(z);
          }
        }
      }
      frontier = std::move(next);
    }
    out.orbit_sizes.push_back(size);
  }
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
  out.transitive = out.orbit_sizes.size() == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Invariant-based recognition of the named groups.  Sound at desk scale
// only: order, class data and spectra separate everything this toolkit can
// build, with the one documented collision (order 20160) resolved by the
// element-order spectrum.
// ---------------------------------------------------------------------------

struct Fingerprint {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> class_size_multiset;  // sorted
  std::set<std::uint64_t> element_order_spectrum;
  bool perfect = false;
  std::uint64_t center_order = 1;
  bool solvable = true;
  // derived length when solvable, otherwise order of the stable term
  std::uint64_t derived_length_or_bottom = 0;

  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const ClassData& cd) {
  Fingerprint f;
  f.order = cd.group_order();
  f.class_size_multiset = cd.sizes();
  std::sort(f.class_size_multiset.begin(), f.class_size_multiset.end());
  for (std::size_t c = 0; c < cd.num_classes(); ++c)
    f.element_order_spectrum.insert(cd.rep_order(c));
  f.perfect = is_perfect(cd.group());
  f.center_order = center(cd).order_u64();
  auto series = derived_series(cd.group());
  f.solvable = series.back().is_trivial();
  f.derived_length_or_bottom =
      f.solvable ? static_cast<std::uint64_t>(series.size() - 1)
                 : static_cast<std::uint64_t>(series.back().order());
  return f;
}

// is q = p^f for the given prime p? returns f
inline std::optional<unsigned> prime_power_exponent(std::uint64_t q, std::uint64_t p) {
  unsigned f = 0;
  while (q % p == 0) q /= p, ++f;
  if (q != 1 || f == 0) return std::nullopt;
  return f;
}

// |PSL_2(q)| and |SL_2(q)|, wide enough that huge q cannot wrap
inline unsigned __int128 psl2_order(std::uint64_t q) {
  unsigned __int128 o = static_cast<unsigned __int128>(q) * q * q - q;
  return q % 2 == 0 ? o : o / 2;
}
inline unsigned __int128 sl2_order(std::uint64_t q) {
  return static_cast<unsigned __int128>(q) * q * q - q;
}

// G isomorphic to PSL_2(q): simple with matching order.  Simple groups of
// equal order are isomorphic in this range (the classical ambiguous order,
// 20160, is not a PSL_2 order).
inline bool looks_like_psl2(const ClassData& cd, std::uint64_t q) {
  if (q < 4) return false;
  if (psl2_order(q) != cd.group_order()) return false;
  return is_simple(cd);
}

// G isomorphic to SL_2(q): for even q this is PSL_2(q); for odd q, a
// perfect group with a unique involution, center of order 2, and simple
// central quotient of the right order (the unique double cover of it).
inline bool looks_like_sl2(const ClassData& cd, std::uint64_t q) {
  if (q < 4) return false;
  if (sl2_order(q) != cd.group_order()) return false;
  if (q % 2 == 0) return is_simple(cd);
  if (!is_perfect(cd.group())) return false;
  std::size_t involution_classes = 0;
  std::uint64_t involutions = 0;
  for (std::size_t c = 0; c < cd.num_classes(); ++c)
    if (cd.rep_order(c) == 2) {
      ++involution_classes;
      involutions += cd.size(c);
    }
  if (involutions != 1) return false;
  PermGroup z = center(cd);
  if (z.order() != 2) return false;
  Quotient quo = quotient(cd.group(), z);
  ClassData qcd(quo.group);
  return is_simple(qcd) && qcd.group_order() == psl2_order(q);
}

enum class NamedKind {
  SL2_3,
  ASL2_3,
  SL2Q,
  PSL2Q,
  PSL3_4,
  M11,
  TitsPrime,
  Other,
};

struct Recognition {
  NamedKind kind = NamedKind::Other;
  std::uint64_t q = 0;  // for SL2Q / PSL2Q
};

inline bool looks_like_sl2_3(const ClassData& cd) {
  if (cd.group_order() != 24) return false;
  Fingerprint f = fingerprint(cd);
  if (f.center_order != 2 || f.perfect || !f.solvable) return false;
  if (f.element_order_spectrum != std::set<std::uint64_t>{1, 2, 3, 4, 6})
    return false;
  return derived_subgroup(cd.group()).order() == 8;
}

inline bool looks_like_m11(const ClassData& cd) {
  return cd.group_order() == 7920 && cd.num_classes() == 10 && is_simple(cd);
}

inline bool looks_like_psl3_4(const ClassData& cd) {
  if (cd.group_order() != 20160) return false;
  // order shared with the alternating group on 8 letters, which contains
  // elements of order 15
  for (std::size_t c = 0; c < cd.num_classes(); ++c)
    if (cd.rep_order(c) == 15) return false;
  return is_simple(cd);
}

inline bool looks_like_asl2_3(const ClassData& cd);

inline Recognition recognize_named(const PermGroup& g) {
  if (g.order() == 17971200)
    return is_perfect(g) ? Recognition{NamedKind::TitsPrime, 0}
                         : Recognition{NamedKind::Other, 0};
  if (!g.order_fits(kEnumerationCap)) return {NamedKind::Other, 0};
  ClassData cd(g);
  if (looks_like_sl2_3(cd)) return {NamedKind::SL2_3, 3};
  if (looks_like_asl2_3(cd)) return {NamedKind::ASL2_3, 3};
  if (looks_like_m11(cd)) return {NamedKind::M11, 0};
  if (looks_like_psl3_4(cd)) return {NamedKind::PSL3_4, 0};
  for (std::uint64_t q = 4; q * q * q <= 2 * cd.group_order() + 8; ++q) {
    // for even q the two coincide; report the simple-group name
    if (looks_like_psl2(cd, q)) return {NamedKind::PSL2Q, q};
    if (looks_like_sl2(cd, q)) return {NamedKind::SL2Q, q};
  }
  return {NamedKind::Other, 0};
}

// ASL_2(3): order 216 with an elementary abelian 3-core of order 9 on whose
// nonidentity elements the group acts transitively, and SL_2(3) quotient.
inline bool looks_like_asl2_3(const ClassData& cd) {
  if (cd.group_order() != 216) return false;
  PermGroup v = p_core(cd, 3);
  if (v.order() != 9 || !is_abelian(v)) return false;
  for (const auto& x : v.generators())
    if (element_order(x) != 3) return false;
  auto tr = acts_transitively_on_nonidentity(cd.group(), v);
  if (!tr.transitive) return false;
  Quotient q = quotient(cd.group(), v);
  ClassData qcd(q.group);
  return looks_like_sl2_3(qcd);
}

}  // namespace codeglab
