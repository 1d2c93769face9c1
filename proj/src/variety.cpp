#include "vizing/variety.hpp"

#include <string>

namespace viz {

namespace {

int count_pairs(int n) { return n < 3 ? 0 : (n - 1) * (n - 2) / 2; }

}  // namespace

VarietyDomain::VarietyDomain(ClassParams p, int vertex_cap)
    : p_(p), eg_pairs_(count_pairs(p.n_g)), eh_pairs_(count_pairs(p.n_h)) {
  if (p_.num_vertices() > vertex_cap)
    throw CapExceededError("variety enumeration cap exceeded: " +
                           std::to_string(p_.num_vertices()) + " vertices > cap " +
                           std::to_string(vertex_cap));
  // Bitmask representation limits, independent of the caller-supplied cap.
  if (p_.num_vertices() > 28 || eg_pairs_ > 28 || eh_pairs_ > 28 ||
      p_.num_vertices() + eg_pairs_ + eh_pairs_ > 60)
    throw CapExceededError("variety domain too large for the bitmask representation");
}

int VarietyDomain::pair_bit(int a, int b, int n) const {
  // pairs (2,3),(2,4),...,(2,n),(3,4),... among non-dominator vertices
  int idx = 0;
  for (int i = 2; i < a; ++i) idx += n - i;
  return idx + (b - a - 1);
}

bool VarietyDomain::value(const VarietyPoint& pt, VarId v) const {
  switch (v.kind()) {
    case VarKind::Vertex:
      return (pt.x_bits >> x_bit(v.a(), v.b())) & 1u;
    case VarKind::EdgeG:
      if (v.a() == 1) return true;
      return (pt.eg_bits >> pair_bit(v.a(), v.b(), p_.n_g)) & 1u;
    case VarKind::EdgeH:
      if (v.a() == 1) return true;
      return (pt.eh_bits >> pair_bit(v.a(), v.b(), p_.n_h)) & 1u;
  }
  return false;
}

VarietyDomain::Neighborhoods VarietyDomain::neighborhoods(uint32_t eg_bits,
                                                          uint32_t eh_bits) const {
  // Row-adjacency masks per factor: adj_g[g] has bit g2 set iff {g,g2} is an
  // edge (dominator edges always present).
  uint32_t adj_g[18] = {0}, adj_h[18] = {0};
  auto link = [](uint32_t* adj, int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  };
  for (int g = 2; g <= p_.n_g; ++g) link(adj_g, 1, g);
  for (int h = 2; h <= p_.n_h; ++h) link(adj_h, 1, h);
  for (int a = 2; a <= p_.n_g; ++a)
    for (int b = a + 1; b <= p_.n_g; ++b)
      if ((eg_bits >> pair_bit(a, b, p_.n_g)) & 1u) link(adj_g, a, b);
  for (int a = 2; a <= p_.n_h; ++a)
    for (int b = a + 1; b <= p_.n_h; ++b)
      if ((eh_bits >> pair_bit(a, b, p_.n_h)) & 1u) link(adj_h, a, b);

  Neighborhoods nb;
  nb.count = p_.num_vertices();
  for (int g = 1; g <= p_.n_g; ++g)
    for (int h = 1; h <= p_.n_h; ++h) {
      uint32_t mask = 1u << x_bit(g, h);
      for (int g2 = 1; g2 <= p_.n_g; ++g2)
        if ((adj_g[g] >> g2) & 1u) mask |= 1u << x_bit(g2, h);
      for (int h2 = 1; h2 <= p_.n_h; ++h2)
        if ((adj_h[h] >> h2) & 1u) mask |= 1u << x_bit(g, h2);
      nb.closed[x_bit(g, h)] = mask;
    }
  return nb;
}

bool VarietyDomain::dominating(const VarietyPoint& pt) const {
  return dominating_x(pt.x_bits, neighborhoods(pt.eg_bits, pt.eh_bits));
}

bool VarietyDomain::decode(uint64_t index, VarietyPoint& pt) const {
  const int xb = x_bit_count();
  pt.x_bits = static_cast<uint32_t>(index & ((uint64_t(1) << xb) - 1));
  index >>= xb;
  pt.eh_bits = static_cast<uint32_t>(index & ((uint64_t(1) << eh_pairs_) - 1));
  index >>= eh_pairs_;
  pt.eg_bits = static_cast<uint32_t>(index);
  return dominating(pt);
}

std::vector<VarietyPoint> VarietyDomain::enumerate() const {
  std::vector<VarietyPoint> out;
  VarietyPoint pt;
  for (uint64_t i = 0; i < total_assignments(); ++i)
    if (decode(i, pt)) out.push_back(pt);
  return out;
}

}  // namespace viz
