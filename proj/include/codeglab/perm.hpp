#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace codeglab {

// A permutation of {0, ..., n-1} stored as its image array.
// Composition acts on the right: (a * b) maps x to b[a[x]].
struct Perm {
  std::vector<std::uint16_t> img;

  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images) : img(std::move(images)) {}

  std::size_t degree() const { return img.size(); }
  std::uint16_t operator[](std::size_t x) const { return img[x]; }

  bool operator==(const Perm&) const = default;
  // Lexicographic order on image arrays; ties broken nowhere else.
  bool operator<(const Perm& o) const { return img < o.img; }
};

inline Perm identity_perm(std::size_t n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.img.size(); ++i)
    if (p.img[i] != i) return false;
  return true;
}

inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  Perm r;
  r.img.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) r.img[x] = b.img[a.img[x]];
  return r;
}

inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

inline Perm inverse(const Perm& p) {
  Perm r;
  r.img.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) r.img[p.img[x]] = static_cast<std::uint16_t>(x);
  return r;
}

// b^-1 * a * b
inline Perm conjugate(const Perm& a, const Perm& b) {
  Perm r;
  r.img.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) r.img[b.img[x]] = b.img[a.img[x]];
  return r;
}

inline Perm commutator(const Perm& a, const Perm& b) {
  return compose(inverse(compose(b, a)), compose(a, b));
}

inline std::uint64_t element_order(const Perm& p) {
  // lcm of cycle lengths
  std::uint64_t ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    do {
      seen[j] = true;
      j = p.img[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline Perm perm_power(const Perm& p, std::uint64_t k) {
  Perm r = identity_perm(p.degree());
  Perm base = p;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

// Validates a 1-based image array as read from external input.
inline Perm perm_from_one_based(const std::vector<long long>& images) {
  const std::size_t n = images.size();
  if (n == 0 || n > 65535) throw std::invalid_argument("degree out of range");
  Perm p;
  p.img.resize(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    long long v = images[i];
    if (v < 1 || v > static_cast<long long>(n))
      throw std::invalid_argument("image out of range");
    if (hit[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("duplicate image");
    hit[static_cast<std::size_t>(v - 1)] = true;
    p.img[i] = static_cast<std::uint16_t>(v - 1);
  }
  return p;
}

// Builds a permutation of the given degree from disjoint cycles of 1-based points.
inline Perm perm_from_cycles(std::size_t degree,
                             const std::vector<std::vector<int>>& cycles) {
  Perm p = identity_perm(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || to < 0 || from >= static_cast<int>(degree) ||
          to >= static_cast<int>(degree))
        throw std::invalid_argument("cycle point out of range");
      p.img[from] = static_cast<std::uint16_t>(to);
    }
  }
  std::vector<bool> hit(degree, false);
  for (auto v : p.img) {
    if (hit[v]) throw std::invalid_argument("cycles not disjoint");
    hit[v] = true;
  }
  return p;
}

inline std::string format_images(const Perm& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) os << ' ';
    os << p.img[i] + 1;
  }
  return os.str();
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p.img) {
      h ^= static_cast<std::uint64_t>(v & 0xff);
      h *= 1099511628211ull;
      h ^= static_cast<std::uint64_t>(v >> 8);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace codeglab
