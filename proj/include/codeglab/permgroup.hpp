#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "codeglab/perm.hpp"

namespace codeglab {

using bigint = boost::multiprecision::cpp_int;

// Every group an analysis touches end-to-end must be fully enumerable.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

namespace detail {

struct StabLevel {
  std::uint16_t base = 0;
  std::vector<std::uint16_t> orbit;   // discovery order, orbit[0] == base
  std::vector<Perm> trans;            // trans[k] maps base to orbit[k]
  std::vector<std::int32_t> where;    // point -> index into orbit, or -1
};

}  // namespace detail

// A finite permutation group held as generators plus a stabilizer chain.
// The chain is built by the deterministic Schreier-Sims procedure: no
// randomization anywhere, so identical generator lists give identical
// chains, orders and enumeration orders.
class PermGroup {
 public:
  PermGroup() : degree_(1), order_(1) {}

  PermGroup(std::size_t degree, std::vector<Perm> generators)
      : degree_(degree) {
    if (degree == 0 || degree > 65535)
      throw std::invalid_argument("degree out of range");
    for (auto& g : generators) {
      if (g.degree() != degree_)
        throw std::invalid_argument("generator degree mismatch");
      if (!is_identity(g)) gens_.push_back(std::move(g));
    }
    build_chain();
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const bigint& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool order_fits(std::uint64_t cap) const { return order_ <= cap; }

  std::uint64_t order_u64() const {
    if (order_ > kEnumerationCap)
      throw std::runtime_error("group exceeds enumeration cap");
    return static_cast<std::uint64_t>(order_);
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [res, lev] = sift(p, 0);
    (void)lev;
    return is_identity(res);
  }

  bool contains_group(const PermGroup& h) const {
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool same_group(const PermGroup& h) const {
    return order_ == h.order_ && contains_group(h);
  }

  // All elements in deterministic chain order. Caller sorts if needed.
  std::vector<Perm> elements() const {
    std::uint64_t n = order_u64();
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(identity_perm(degree_));
    for (std::size_t lev = levels_.size(); lev-- > 0;) {
      std::vector<Perm> next;
      next.reserve(out.size() * levels_[lev].trans.size());
      for (const auto& t : levels_[lev].trans)
        for (const auto& h : out) next.push_back(h * t);
      out = std::move(next);
    }
    return out;
  }

  std::vector<Perm> sorted_elements() const {
    auto e = elements();
    std::sort(e.begin(), e.end());
    return e;
  }

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> strong_;
  std::vector<detail::StabLevel> levels_;
  bigint order_;

  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& L = levels_[i];
      std::uint16_t x = p.img[L.base];
      if (L.where[x] < 0) return {std::move(p), i};
      p = p * inverse(L.trans[static_cast<std::size_t>(L.where[x])]);
    }
    return {std::move(p), levels_.size()};
  }

  std::vector<Perm> level_gens(std::size_t i) const {
    std::vector<Perm> out;
    for (const auto& s : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (s.img[levels_[j].base] != levels_[j].base) {
          fixes = false;
          break;
        }
      if (fixes) out.push_back(s);
    }
    return out;
  }

  void recompute_levels() {
    // Extend the base until no strong generator fixes all base points.
    for (;;) {
      bool again = false;
      for (const auto& s : strong_) {
        bool fixes_all = true;
        for (const auto& L : levels_)
          if (s.img[L.base] != L.base) {
            fixes_all = false;
            break;
          }
        if (fixes_all && !is_identity(s)) {
          detail::StabLevel L;
          for (std::size_t x = 0; x < degree_; ++x)
            if (s.img[x] != x) {
              L.base = static_cast<std::uint16_t>(x);
              break;
            }
          levels_.push_back(std::move(L));
          again = true;
          break;
        }
      }
      if (!again) break;
    }
    // Orbits and transversals, breadth-first in generator order.
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      auto& L = levels_[i];
      auto gens = level_gens(i);
      L.orbit.clear();
      L.trans.clear();
      L.where.assign(degree_, -1);
      L.orbit.push_back(L.base);
      L.trans.push_back(identity_perm(degree_));
      L.where[L.base] = 0;
      for (std::size_t head = 0; head < L.orbit.size(); ++head) {
        std::uint16_t p = L.orbit[head];
        for (const auto& s : gens) {
          std::uint16_t q = s.img[p];
          if (L.where[q] < 0) {
            L.where[q] = static_cast<std::int32_t>(L.orbit.size());
            L.orbit.push_back(q);
            L.trans.push_back(L.trans[head] * s);
          }
        }
      }
    }
  }

  void build_chain() {
    strong_ = gens_;
    levels_.clear();
    for (;;) {
      recompute_levels();
      Perm residue;
      bool found = false;
      for (std::size_t i = 0; i < levels_.size() && !found; ++i) {
        const auto& L = levels_[i];
        auto gens = level_gens(i);
        for (std::size_t k = 0; k < L.orbit.size() && !found; ++k) {
          for (const auto& s : gens) {
            std::uint16_t q = s.img[L.orbit[k]];
            Perm sch = L.trans[k] * s *
                       inverse(L.trans[static_cast<std::size_t>(L.where[q])]);
            if (is_identity(sch)) continue;
            auto [res, lev] = sift(std::move(sch), i + 1);
            (void)lev;
            if (!is_identity(res)) {
              residue = std::move(res);
              found = true;
              break;
            }
          }
        }
      }
      if (!found) break;
      strong_.push_back(std::move(residue));
      levels_.clear();
    }
    order_ = 1;
    for (const auto& L : levels_) order_ *= static_cast<unsigned>(L.orbit.size());
  }
};

// Smallest subgroup containing S and closed under conjugation by G.
inline PermGroup normal_closure(const PermGroup& g, std::vector<Perm> seed) {
  std::vector<Perm> gens;
  for (auto& s : seed) {
    if (s.degree() != g.degree())
      throw std::invalid_argument("normal_closure: degree mismatch");
    if (!g.contains(s)) throw std::invalid_argument("element not in group");
    if (!is_identity(s)) gens.push_back(std::move(s));
  }
  PermGroup h(g.degree(), gens);
  for (;;) {
    bool grew = false;
    const std::size_t snapshot = gens.size();
    for (const auto& x : g.generators())
      for (std::size_t i = 0; i < snapshot; ++i) {
        Perm c = conjugate(gens[i], x);
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          grew = true;
        }
      }
    if (!grew) break;
    h = PermGroup(g.degree(), gens);
  }
  return h;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Perm c = commutator(gs[i], gs[j]);
      if (!is_identity(c)) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

// Derived series until it stabilizes. Last entry is trivial iff solvable.
inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    bool trivial = d.is_trivial();
    series.push_back(std::move(d));
    if (trivial) break;
  }
  return series;
}

inline bool is_perfect(const PermGroup& g) {
  return !g.is_trivial() && derived_subgroup(g).order() == g.order();
}

inline bool is_solvable(const PermGroup& g) {
  return derived_series(g).back().is_trivial();
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!is_identity(commutator(gs[i], gs[j]))) return false;
  return true;
}

}  // namespace codeglab
