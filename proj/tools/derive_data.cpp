// Regenerates the shipped .pgr data files.  Every search below is
// deterministic, so reruns are byte-identical; the files carry comments
// describing how they were produced and order directives that the parser
// enforces.
//
//   data/psl3_4.pgr       the 21-point projective-plane action, from the
//                         builtin matrix construction
//   data/psigmal2_32.pgr  the 33-point projective-line action of PSL_2(32)
//                         extended by the field squaring map
//   data/sl2_5_f3_4.pgr   the affine action on the 81 vectors of a
//                         2-dimensional space over F_9 read as a
//                         4-dimensional space over F_3, restricted to a
//                         subgroup of the linear part isomorphic to
//                         SL_2(5), plus translations

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <vector>

#include "codeglab/classes.hpp"
#include "codeglab/corpus.hpp"
#include "codeglab/gf.hpp"
#include "codeglab/perm.hpp"
#include "codeglab/permgroup.hpp"
#include "codeglab/structure.hpp"

using namespace codeglab;

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  std::printf("wrote %s (%zu bytes)\n", path.c_str(), text.size());
}

std::string gen_lines(const std::vector<Perm>& gens) {
  std::string s;
  for (const auto& g : gens) {
    s += format_images(g);
    s += '\n';
  }
  return s;
}

void emit_psl3_4() {
  PermGroup g = projective_special_linear_3_4();
  std::string text;
  text += "# projective special linear group of degree 3 over the 4-element field,\n";
  text += "# acting on the 21 points of its projective plane.\n";
  text += "# generators: the transvections with parameters 1 and a primitive field\n";
  text += "# element in the (1,2) position, and the coordinate 3-cycle; scalars act\n";
  text += "# trivially, so the image is the simple quotient.  regenerate with the\n";
  text += "# derive_data tool.\n";
  text += "21\n";
  text += "#! order=20160\n";
  text += "#! simple=true\n";
  text += gen_lines(g.generators());
  write_file("data/psl3_4.pgr", text);
}

void emit_psigmal2_32() {
  // projective line points as in the builtin: index v < 32 is (1 : v),
  // index 32 is (0 : 1); the field squaring map sends (1 : v) to (1 : v^2)
  GF f = GF::make(2, 5);
  PermGroup psl = projective_special_linear_2(32);
  Perm frob;
  frob.img.resize(33);
  for (int v = 0; v < 32; ++v)
    frob.img[static_cast<std::size_t>(v)] =
        static_cast<std::uint16_t>(f.mul(v, v));
  frob.img[32] = 32;
  std::vector<Perm> gens = psl.generators();
  gens.push_back(frob);
  PermGroup g(33, gens);
  if (g.order() != 163680) throw std::logic_error("extension order wrong");

  std::string text;
  text += "# the simple group on the 33-point projective line over the 32-element\n";
  text += "# field, extended by its field automorphism of order 5 (the squaring\n";
  text += "# map on coordinates).  order 32736 * 5.  regenerate with derive_data.\n";
  text += "33\n";
  text += "#! order=163680\n";
  text += gen_lines(g.generators());
  write_file("data/psigmal2_32.pgr", text);
}

// 2x2 matrices over F_9 with determinant 1
struct M2 {
  std::array<int, 4> m;
};

void emit_sl2_5_on_f81() {
  GF f = GF::make(3, 2);
  const int q = 9;
  // all of SL_2(9), in encoding order
  std::vector<M2> sl;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) sl.push_back({{a, b, c, d}});
  if (sl.size() != 720) throw std::logic_error("wrong SL2(9) size");

  auto mul = [&](const M2& x, const M2& y) -> M2 {
    return {{f.add(f.mul(x.m[0], y.m[0]), f.mul(x.m[1], y.m[2])),
             f.add(f.mul(x.m[0], y.m[1]), f.mul(x.m[1], y.m[3])),
             f.add(f.mul(x.m[2], y.m[0]), f.mul(x.m[3], y.m[2])),
             f.add(f.mul(x.m[2], y.m[1]), f.mul(x.m[3], y.m[3]))}};
  };
  auto order_of = [&](const M2& x) {
    M2 p = x;
    int o = 1;
    while (p.m != std::array<int, 4>{1, 0, 0, 1}) {
      p = mul(p, x);
      ++o;
    }
    return o;
  };
  auto key = [&](const M2& x) {
    return ((x.m[0] * q + x.m[1]) * q + x.m[2]) * q + x.m[3];
  };

  // deterministic search for a subgroup isomorphic to SL_2(5): scan pairs of
  // an order-4 and an order-10 element in encoding order, take the first
  // pair whose closure is a perfect group of order 120
  std::vector<M2> gen4, gen10;
  for (const auto& x : sl) {
    int o = order_of(x);
    if (o == 4) gen4.push_back(x);
    if (o == 10) gen10.push_back(x);
  }
  auto closure = [&](const M2& x, const M2& y, std::vector<M2>& out) {
    std::set<int> seen;
    out.clear();
    out.push_back({{1, 0, 0, 1}});
    seen.insert(key(out[0]));
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const M2* g2 : {&x, &y}) {
        M2 z = mul(out[head], *g2);
        if (seen.insert(key(z)).second) out.push_back(z);
        if (out.size() > 120) return false;
      }
    }
    return out.size() == 120;
  };
  auto inv = [&](const M2& m) -> M2 {
    // determinant 1: adjugate
    return {{m.m[3], f.neg(m.m[1]), f.neg(m.m[2]), m.m[0]}};
  };
  // derived subgroup: closure of all pairwise commutators
  auto is_perfect_set = [&](const std::vector<M2>& h) {
    std::set<int> seen;
    std::vector<M2> der;
    for (const auto& a : h)
      for (const auto& b : h) {
        M2 c = mul(mul(inv(a), inv(b)), mul(a, b));
        if (seen.insert(key(c)).second) der.push_back(c);
      }
    std::vector<M2> gens = der;
    for (std::size_t head = 0; head < der.size(); ++head)
      for (const auto& g2 : gens) {
        M2 z = mul(der[head], g2);
        if (seen.insert(key(z)).second) der.push_back(z);
      }
    return der.size() == h.size();
  };
  M2 found_a{{0, 0, 0, 0}}, found_b{{0, 0, 0, 0}};
  bool found = false;
  std::vector<M2> elems;
  for (const auto& x : gen4) {
    for (const auto& y : gen10) {
      if (!closure(x, y, elems)) continue;
      if (!is_perfect_set(elems)) continue;
      found_a = x;
      found_b = y;
      found = true;
      break;
    }
    if (found) break;
  }
  if (!found) throw std::logic_error("no SL2(5) subgroup found");
  std::printf("SL2(5) < SL2(9): a=[%d %d; %d %d] b=[%d %d; %d %d]\n",
              found_a.m[0], found_a.m[1], found_a.m[2], found_a.m[3],
              found_b.m[0], found_b.m[1], found_b.m[2], found_b.m[3]);

  // affine action on the 81 vectors (u, v), point index u*9+v
  auto mat_perm = [&](const M2& m) {
    Perm p;
    p.img.resize(81);
    for (int u = 0; u < q; ++u)
      for (int v = 0; v < q; ++v) {
        int x = f.add(f.mul(u, m.m[0]), f.mul(v, m.m[2]));
        int y = f.add(f.mul(u, m.m[1]), f.mul(v, m.m[3]));
        p.img[static_cast<std::size_t>(u * q + v)] =
            static_cast<std::uint16_t>(x * q + y);
      }
    return p;
  };
  auto translation = [&](int du, int dv) {
    Perm p;
    p.img.resize(81);
    for (int u = 0; u < q; ++u)
      for (int v = 0; v < q; ++v)
        p.img[static_cast<std::size_t>(u * q + v)] = static_cast<std::uint16_t>(
            f.add(u, du) * q + f.add(v, dv));
    return p;
  };
  int prim = f.primitive_element();
  std::vector<Perm> gens{translation(1, 0), translation(prim, 0),
                         translation(0, 1), translation(0, prim),
                         mat_perm(found_a), mat_perm(found_b)};
  PermGroup g(81, gens);
  if (g.order() != 9720) throw std::logic_error("affine extension order wrong");

  // the linear part must have vector orbits {0} u {40} u {40}
  ClassData cd(g);
  PermGroup v3 = p_core(cd, 3);
  if (v3.order() != 81) throw std::logic_error("translation core wrong");
  auto tr = acts_transitively_on_nonidentity(g, v3);
  if (tr.orbit_sizes != std::vector<std::uint64_t>{40, 40})
    throw std::logic_error("orbit sizes wrong");

  std::string text;
  text += "# a 4-dimensional module over the 3-element field for the double cover\n";
  text += "# of the alternating group on 5 letters: the 81 vectors of a plane over\n";
  text += "# the 9-element field, acted on by translations and by the first\n";
  text += "# subgroup, in matrix-encoding order, of the determinant-1 group that\n";
  text += "# closes to a perfect group of order 120 from an order-4 and an\n";
  text += "# order-10 generator.  conjugation orbit sizes on the translation\n";
  text += "# subgroup are 1, 40, 40.  regenerate with derive_data.\n";
  text += "81\n";
  text += "#! order=9720\n";
  text += gen_lines(g.generators());
  write_file("data/sl2_5_f3_4.pgr", text);
}

}  // namespace

int main() {
  emit_psl3_4();
  emit_psigmal2_32();
  emit_sl2_5_on_f81();
  return 0;
}
