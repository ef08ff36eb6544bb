#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gcg/dyckpath.hpp"

namespace gcg {

// S1(h_1..h_a1) and S2(v_1..v_a2).
using HGrading = std::vector<int>;
using VGrading = std::vector<int>;

struct GradingPair {
  HGrading s1;
  VGrading s2;
  int m1() const;
  int m2() const;
  auto operator<=>(const GradingPair&) const = default;
};

int grading_size(const std::vector<int>& s);

int fstat_h(const DyckPath& path, const HGrading& s1, const Span& sub);
int fstat_v(const DyckPath& path, const VGrading& s2, const Span& sub);
inline int fstat_h(const DyckPath& path, const HGrading& s1, const Subpath& sub) {
  return fstat_h(path, s1, path.span(sub));
}
inline int fstat_v(const DyckPath& path, const VGrading& s2, const Subpath& sub) {
  return fstat_v(path, s2, path.span(sub));
}

// Torus follows the cyclic path convention for every pair (h, v). NoWrap
// only examines pairs with h before v, the reading that never passes the
// origin; it exists for the wrap diagnostic.
enum class WrapConvention { Torus, NoWrap };

bool is_compatible(const DyckPath& path, const HGrading& s1, const VGrading& s2,
                   WrapConvention wrap = WrapConvention::Torus);
// True when the two wrap conventions disagree on this pair.
bool wrap_sensitive(const DyckPath& path, const HGrading& s1, const VGrading& s2);

struct LocalShadow {
  bool whole_loop = false;
  Span path;  // the minimal path he (or ev); the full loop when whole_loop
};

LocalShadow local_shadow_h(const DyckPath& path, int j, const HGrading& s1);
LocalShadow local_shadow_v(const DyckPath& path, int j, const VGrading& s2);

struct ShadowReport {
  std::vector<EdgeRef> shadow;         // sorted by index
  std::vector<EdgeRef> remote_shadow;  // sorted by index
  std::vector<LocalShadow> local;      // local[j - 1] belongs to edge j
  // (j, depth) blocks for a horizontal grading, (j, height) blocks for a
  // vertical one; each block in left-to-right order.
  std::map<std::pair<int, int>, std::vector<EdgeRef>> partition;
};

ShadowReport shadow_report_h(const DyckPath& path, const HGrading& s1);
ShadowReport shadow_report_v(const DyckPath& path, const VGrading& s2);

// Closed-form nonemptiness test and block size for rsh(S1)_{j;d} and
// rsh(S2)_{j;l}. The size functions throw CriterionFails when the test fails.
bool rsh_criterion_h(const DyckPath& path, const HGrading& s1, int j, int d);
bool rsh_criterion_v(const DyckPath& path, const VGrading& s2, int j, int ell);
int rsh_block_size_h(const DyckPath& path, const HGrading& s1, int j, int d);
int rsh_block_size_v(const DyckPath& path, const VGrading& s2, int j, int ell);

std::vector<GradingPair> enumerate_bruteforce(int a1, int a2, int d1, int d2);
std::vector<GradingPair> enumerate_fast(int a1, int a2, int d1, int d2, int threads = 1);

// All compatible partners of one vertical grading, factored as a product of
// free edges (any value in [0, d1]) with the admissible value tuples on the
// remote shadow. Edges in the shadow but outside the remote shadow are zero.
struct VerticalClass {
  VGrading s2;
  std::vector<int> free_edges;
  std::vector<int> remote_edges;
  std::vector<std::vector<int>> remote_values;
};

std::vector<VerticalClass> vertical_classes(int a1, int a2, int d1, int d2, int threads = 1);
std::vector<HGrading> expand_class(const VerticalClass& c, int a1, int d1);

// The grading on D_{r*a2 - a1, a2} given by j -> r - S2(v_{a2 + 1 - j}).
VGrading phi_pullback(const DyckPath& path, const VGrading& s2, int r);
// Transports S1 (supported on rsh(S2)) blockwise onto D_{r*a2 - a1, a2}.
HGrading omega(const DyckPath& path, const HGrading& s1, const VGrading& s2, int r);

bool support_region(std::int64_t d1, std::int64_t d2, std::int64_t a1, std::int64_t a2,
                    std::int64_t m1, std::int64_t m2);

}  // namespace gcg
