#ifndef VIZING_VARS_HPP
#define VIZING_VARS_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace viz {

enum class VarKind : uint8_t { Vertex = 0, EdgeG = 1, EdgeH = 2 };

/// A variable of the product-graph polynomial ring: a vertex variable x_{gh}
/// or an edge variable e_{gg'} / e_{hh'} with the pair stored smaller-first.
/// Indices are 1-based. The encoding orders variables as Vertex block, then
/// EdgeG, then EdgeH, each block lexicographic by indices; this is also the
/// variable priority of the default term order.
class VarId {
 public:
  static VarId vertex(int g, int h) { return VarId(VarKind::Vertex, g, h); }
  static VarId edge_g(int g, int g2) {
    if (g == g2) throw std::invalid_argument("VarId: edge endpoints equal");
    return VarId(VarKind::EdgeG, std::min(g, g2), std::max(g, g2));
  }
  static VarId edge_h(int h, int h2) {
    if (h == h2) throw std::invalid_argument("VarId: edge endpoints equal");
    return VarId(VarKind::EdgeH, std::min(h, h2), std::max(h, h2));
  }

  VarKind kind() const { return static_cast<VarKind>(code_ >> 16); }
  int a() const { return static_cast<int>((code_ >> 8) & 0xff); }
  int b() const { return static_cast<int>(code_ & 0xff); }
  uint32_t code() const { return code_; }

  std::string str() const;

  auto operator<=>(const VarId&) const = default;

 private:
  VarId(VarKind k, int a, int b) {
    if (a < 1 || a > 255 || b < 1 || b > 255)
      throw std::invalid_argument("VarId: index out of range");
    code_ = (static_cast<uint32_t>(k) << 16) | (static_cast<uint32_t>(a) << 8) |
            static_cast<uint32_t>(b);
  }
  uint32_t code_;
};

/// Graph-class parameters for domination number 1 on both factors; the fixed
/// dominators are vertex 1 of each factor.
struct ClassParams {
  int n_g = 1;
  int n_h = 1;

  ClassParams(int ng, int nh) : n_g(ng), n_h(nh) {
    if (ng < 1 || nh < 1) throw std::invalid_argument("ClassParams: sizes must be >= 1");
  }
  int d() const { return n_g + n_h - 1; }
  int num_vertices() const { return n_g * n_h; }
};

}  // namespace viz

#endif  // VIZING_VARS_HPP
