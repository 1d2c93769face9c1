#ifndef VIZING_VARIETY_HPP
#define VIZING_VARIETY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vizing/vars.hpp"

namespace viz {

struct CapExceededError : std::domain_error {
  explicit CapExceededError(const std::string& what) : std::domain_error(what) {}
};

/// A 0/1 point of the Vizing variety: dominator edges are implicitly 1, the
/// remaining edges range freely and the x-support dominates the encoded
/// product graph.
struct VarietyPoint {
  uint32_t x_bits = 0;   // bit (g-1)*n_h + (h-1)
  uint32_t eg_bits = 0;  // non-dominator G-pairs (a,b), 2<=a<b, lexicographic
  uint32_t eh_bits = 0;
};

/// Enumeration domain for a graph-class pair: iterates every assignment of
/// free edges and vertex subsets in a fixed order (edge bits major, x bits
/// minor), filtering to dominating sets. Deterministic and restartable from a
/// flat index, which also gives the parallel kernels their partitioning.
class VarietyDomain {
 public:
  explicit VarietyDomain(ClassParams p, int vertex_cap = 12);

  const ClassParams& params() const { return p_; }
  int x_bit_count() const { return p_.num_vertices(); }
  int eg_bit_count() const { return eg_pairs_; }
  int eh_bit_count() const { return eh_pairs_; }
  uint64_t total_assignments() const {
    return uint64_t(1) << (x_bit_count() + eg_pairs_ + eh_pairs_);
  }

  /// Decodes a flat assignment index; true iff the point lies in the variety.
  bool decode(uint64_t index, VarietyPoint& pt) const;

  /// All variety points in enumeration order.
  std::vector<VarietyPoint> enumerate() const;

  /// Value of a variable at a point (dominator edges read as 1).
  bool value(const VarietyPoint& pt, VarId v) const;

  int x_bit(int g, int h) const { return (g - 1) * p_.n_h + (h - 1); }

  /// Per-vertex neighborhood masks over x-bit indices for a fixed edge
  /// assignment; hoisting this out of the x loop is what makes the scan
  /// kernels cheap.
  struct Neighborhoods {
    uint32_t closed[32];  // closed[v] = {v} union N(v) as x-bit mask
    int count = 0;
  };
  Neighborhoods neighborhoods(uint32_t eg_bits, uint32_t eh_bits) const;
  static bool dominating_x(uint32_t x_bits, const Neighborhoods& nb) {
    for (int v = 0; v < nb.count; ++v)
      if (!(x_bits & nb.closed[v])) return false;
    return true;
  }

 private:
  int pair_bit(int a, int b, int n) const;  // pairs 2<=a<b<=n, lex
  bool dominating(const VarietyPoint& pt) const;

  ClassParams p_;
  int eg_pairs_, eh_pairs_;
};

}  // namespace viz

#endif  // VIZING_VARIETY_HPP
