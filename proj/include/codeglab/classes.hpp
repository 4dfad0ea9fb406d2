#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "codeglab/perm.hpp"
#include "codeglab/permgroup.hpp"

namespace codeglab {

// Conjugacy class data over the fully enumerated element set.
//
// Elements are sorted lexicographically and classes are discovered by
// scanning that order, so the representative of each class is its
// lexicographically least element and classes come out sorted by
// representative. The identity class is always index 0.
class ClassData {
 public:
  explicit ClassData(PermGroup g) : group_(std::move(g)) {
    const std::uint64_t n = group_.order_u64();
    elems_ = group_.sorted_elements();
    index_.reserve(elems_.size() * 2);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);

    class_of_.assign(elems_.size(), -1);
    witness_parent_.assign(elems_.size(), -1);
    witness_gen_.assign(elems_.size(), -1);
    const auto& gens = group_.generators();
    for (std::size_t seed = 0; seed < elems_.size(); ++seed) {
      if (class_of_[seed] >= 0) continue;
      const std::int32_t cls = static_cast<std::int32_t>(reps_.size());
      reps_.push_back(seed);
      std::vector<std::size_t> frontier{seed};
      class_of_[seed] = cls;
      std::uint64_t size = 0;
      for (std::size_t head = 0; head < frontier.size(); ++head) {
        std::size_t cur = frontier[head];
        ++size;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          Perm c = conjugate(elems_[cur], gens[gi]);
          std::size_t ci = index_.at(c);
          if (class_of_[ci] < 0) {
            class_of_[ci] = cls;
            witness_parent_[ci] = static_cast<std::int64_t>(cur);
            witness_gen_[ci] = static_cast<std::int32_t>(gi);
            frontier.push_back(ci);
          }
        }
      }
      sizes_.push_back(size);
      if (n % size != 0) throw std::logic_error("class size does not divide order");
    }

    // Per-class element orders and power-to-class tables.
    rep_order_.resize(reps_.size());
    pow_class_.resize(reps_.size());
    exponent_ = 1;
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      const Perm& r = elems_[reps_[c]];
      std::uint64_t o = element_order(r);
      rep_order_[c] = o;
      exponent_ = std::lcm(exponent_, o);
      pow_class_[c].resize(o);
      Perm p = identity_perm(group_.degree());
      for (std::uint64_t t = 0; t < o; ++t) {
        pow_class_[c][t] = class_of(p);
        p = p * r;
      }
    }
    inverse_class_.resize(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c)
      inverse_class_[c] = pow_class_[c][rep_order_[c] - 1];
  }

  const PermGroup& group() const { return group_; }
  std::uint64_t group_order() const { return elems_.size(); }
  std::size_t num_classes() const { return reps_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(std::size_t i) const { return elems_[i]; }
  const Perm& rep(std::size_t c) const { return elems_[reps_[c]]; }
  std::uint64_t size(std::size_t c) const { return sizes_[c]; }
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  std::uint64_t rep_order(std::size_t c) const { return rep_order_[c]; }
  std::uint64_t exponent() const { return exponent_; }
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }

  std::size_t class_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return static_cast<std::size_t>(class_of_[it->second]);
  }

  std::size_t class_of_index(std::size_t elem_index) const {
    return static_cast<std::size_t>(class_of_[elem_index]);
  }

  bool group_contains(const Perm& p) const { return index_.count(p) != 0; }

  std::size_t element_index(const Perm& p) const { return index_.at(p); }

  // class of rep(c)^t for any integer t >= 0
  std::size_t power_class(std::size_t c, std::uint64_t t) const {
    return pow_class_[c][t % rep_order_[c]];
  }

  // Conjugator w with rep(class_of(x))^w = x, rebuilt from the discovery tree.
  Perm witness(const Perm& x) const {
    std::size_t i = index_.at(x);
    Perm w = identity_perm(group_.degree());
    while (witness_parent_[i] >= 0) {
      w = group_.generators()[static_cast<std::size_t>(witness_gen_[i])] * w;
      i = static_cast<std::size_t>(witness_parent_[i]);
    }
    return w;
  }

 private:
  PermGroup group_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<std::int32_t> class_of_;
  std::vector<std::size_t> reps_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> rep_order_;
  std::vector<std::vector<std::size_t>> pow_class_;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::int64_t> witness_parent_;
  std::vector<std::int32_t> witness_gen_;
  std::uint64_t exponent_ = 1;
};

// Class-multiplication coefficients for class i:
// entry (j,k) = #{ (x,y) : x in C_i, y in C_j, x*y = rep(k) }.
// The identity class gives the identity matrix.
inline std::vector<std::vector<std::uint64_t>> class_matrix(const ClassData& cd,
                                                            std::size_t i) {
  const std::size_t r = cd.num_classes();
  std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(r, 0));
  // Walk C_i once; for x in C_i and target rep(k), y = x^-1 * rep(k).
  std::vector<Perm> reps_k(r);
  for (std::size_t k = 0; k < r; ++k) reps_k[k] = cd.rep(k);
  for (std::size_t idx = 0; idx < cd.elements().size(); ++idx) {
    if (cd.class_of_index(idx) != i) continue;
    Perm xinv = inverse(cd.element(idx));
    for (std::size_t k = 0; k < r; ++k) {
      Perm y = xinv * reps_k[k];
      ++m[cd.class_of(y)][k];
    }
  }
  // Pair count per target class is constant over the class:
  // sum_k m[j][k] * |C_k| = |C_i| * |C_j|.
  for (std::size_t j = 0; j < r; ++j) {
    unsigned __int128 tot = 0;
    for (std::size_t k = 0; k < r; ++k)
      tot += static_cast<unsigned __int128>(m[j][k]) * cd.size(k);
    if (tot != static_cast<unsigned __int128>(cd.size(i)) * cd.size(j))
      throw std::logic_error("class matrix weighted column sum violated");
  }
  return m;
}

}  // namespace codeglab
