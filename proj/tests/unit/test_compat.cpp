#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gcg/compat.hpp"
#include "gcg/error.hpp"

using namespace gcg;

namespace {

EdgeRef H(int i) { return {EdgeKind::Horizontal, i}; }
EdgeRef V(int j) { return {EdgeKind::Vertical, j}; }

// Compatibility straight from the definition: walk the cyclic path from h
// to v and look for a proper prefix he or a proper suffix ev that balances.
bool compatible_by_definition(const DyckPath& d, const HGrading& s1, const VGrading& s2) {
  const int n = d.length();
  for (int i = 1; i <= d.a1(); ++i) {
    for (int j = 1; j <= d.a2(); ++j) {
      const int p0 = d.position(H(i));
      const int len = ((d.position(V(j)) - p0) % n + n) % n + 1;
      std::vector<EdgeRef> hv;
      for (int k = 0; k < len; ++k) hv.push_back(d.edges()[static_cast<std::size_t>((p0 + k) % n)]);
      bool ok = false;
      int weight = 0, other = 0;
      for (int m = 0; m + 1 < len && !ok; ++m) {
        if (hv[m].kind == EdgeKind::Horizontal) weight += s1[hv[m].index - 1]; else ++other;
        ok = weight == other;
      }
      weight = other = 0;
      for (int m = len - 1; m >= 1 && !ok; --m) {
        if (hv[m].kind == EdgeKind::Vertical) weight += s2[hv[m].index - 1]; else ++other;
        ok = weight == other;
      }
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> all_gradings(int length, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(length), 0);
  for (;;) {
    out.push_back(s);
    std::size_t k = 0;
    while (k < s.size() && s[k] == max_value) s[k++] = 0;
    if (k == s.size()) return out;
    ++s[k];
  }
}

}  // namespace

TEST(Compat, Statistics) {
  const DyckPath d(5, 2);
  const HGrading s1{2, 1, 0, 0, 0};
  EXPECT_EQ(fstat_h(d, s1, Subpath{H(1), H(2)}), 3);
  EXPECT_EQ(fstat_h(d, HGrading(5, 0), Subpath{H(1), V(2)}), -2);
  EXPECT_EQ(fstat_v(d, VGrading(2, 0), Subpath{H(2), V(2)}), -4);
  EXPECT_EQ(fstat_h(d, HGrading{1, 1, 0, 0, 0}, Span{0, 7}), 0);
}

TEST(Compat, CompatibilityExamples) {
  const DyckPath d(5, 2);
  EXPECT_TRUE(is_compatible(d, {2, 1, 0, 0, 0}, {1, 3}));
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) EXPECT_TRUE(is_compatible(d, HGrading(5, 0), {a, b}));
  }
  EXPECT_FALSE(is_compatible(d, {1, 0, 0, 0, 0}, {3, 3}));
  EXPECT_THROW(is_compatible(d, {1, 0}, {0, 0}), Error);
}

TEST(Compat, MatchesDefinitionExhaustively) {
  for (int a1 = 1; a1 <= 4; ++a1) {
    for (int a2 = 1; a2 <= 3; ++a2) {
      const DyckPath d(a1, a2);
      for (const auto& s1 : all_gradings(a1, 2)) {
        for (const auto& s2 : all_gradings(a2, 3)) {
          ASSERT_EQ(is_compatible(d, s1, s2), compatible_by_definition(d, s1, s2))
              << "a=(" << a1 << "," << a2 << ")";
        }
      }
    }
  }
}

TEST(Compat, LocalShadows) {
  const DyckPath d(5, 2);
  EXPECT_TRUE(local_shadow_h(d, 1, {2, 1, 0, 0, 0}).whole_loop);
  const LocalShadow trivial = local_shadow_h(d, 4, {2, 1, 0, 0, 0});
  EXPECT_FALSE(trivial.whole_loop);
  EXPECT_EQ(trivial.path.start, d.position(H(4)));
  EXPECT_EQ(trivial.path.length, 1);
  const LocalShadow v1 = local_shadow_v(d, 1, {1, 0});
  EXPECT_FALSE(v1.whole_loop);
  EXPECT_EQ(v1.path.start, d.position(H(3)));
  EXPECT_EQ(v1.path.length, 2);
}

TEST(Compat, ShadowReports) {
  const DyckPath d(5, 2);
  const ShadowReport zero = shadow_report_h(d, HGrading(5, 0));
  EXPECT_TRUE(zero.shadow.empty());
  EXPECT_TRUE(zero.remote_shadow.empty());
  EXPECT_EQ(shadow_report_h(d, {2, 1, 0, 0, 0}).shadow, (std::vector<EdgeRef>{V(1), V(2)}));
  const ShadowReport v = shadow_report_v(d, {1, 0});
  EXPECT_EQ(v.shadow, (std::vector<EdgeRef>{H(3)}));
  EXPECT_TRUE(v.remote_shadow.empty());
}

TEST(Compat, RemoteBlockSizeNeedsCriterion) {
  const DyckPath d(5, 2);
  for (int j = 1; j <= 2; ++j) {
    for (int ell = 0; ell < 2; ++ell) {
      if (j == ell + 1) {
        EXPECT_THROW(rsh_block_size_v(d, {0, 0}, j, ell), Error);
        continue;
      }
      if (rsh_criterion_v(d, {0, 0}, j, ell)) continue;
      try {
        rsh_block_size_v(d, {0, 0}, j, ell);
        ADD_FAILURE() << "no error for j=" << j << " l=" << ell;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CriterionFails);
      }
    }
  }
}

TEST(Compat, Enumeration) {
  const auto small = enumerate_bruteforce(1, 1, 2, 3);
  EXPECT_EQ(small.size(), 6u);
  std::set<std::pair<int, int>> seen;
  for (const auto& p : small) seen.insert({p.s1[0], p.s2[0]});
  EXPECT_EQ(seen, (std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}}));

  EXPECT_EQ(enumerate_bruteforce(3, 0, 2, 3).size(), 27u);
  EXPECT_EQ(enumerate_fast(3, 0, 2, 3).size(), 27u);
  const auto origin = enumerate_fast(0, 0, 2, 3);
  ASSERT_EQ(origin.size(), 1u);
  EXPECT_TRUE(origin[0].s1.empty() && origin[0].s2.empty());

  EXPECT_EQ(enumerate_bruteforce(5, 2, 2, 3).size(), 547u);
  EXPECT_EQ(enumerate_fast(5, 2, 2, 3), enumerate_bruteforce(5, 2, 2, 3));
  EXPECT_EQ(enumerate_fast(5, 2, 2, 3, 4), enumerate_fast(5, 2, 2, 3, 1));
}

TEST(Compat, EnumerationOrderIsCanonical) {
  const auto pairs = enumerate_fast(4, 3, 2, 2);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const bool ordered = pairs[i - 1].s2 < pairs[i].s2 || (pairs[i - 1].s2 == pairs[i].s2 && pairs[i - 1].s1 < pairs[i].s1);
    ASSERT_TRUE(ordered) << i;
  }
}

TEST(Compat, Pullback) {
  const DyckPath d(5, 2);
  EXPECT_EQ(phi_pullback(d, {1, 3}, 3), (VGrading{0, 2}));
  EXPECT_EQ(phi_pullback(d, {3, 3}, 3), (VGrading{0, 0}));
  EXPECT_EQ(omega(d, HGrading(5, 0), {1, 3}, 3), HGrading(1, 0));
}

TEST(Compat, SupportRegion) {
  EXPECT_TRUE(support_region(2, 3, 5, 2, 0, 6));
  EXPECT_TRUE(support_region(2, 3, 5, 2, 10, 0));
  EXPECT_FALSE(support_region(2, 3, 5, 2, 10, 1));
  EXPECT_TRUE(support_region(2, 3, 0, 0, 0, 0));
  EXPECT_FALSE(support_region(2, 3, 0, 0, 1, 0));
  EXPECT_FALSE(support_region(2, 3, 0, 0, 0, 1));
}

TEST(Compat, WrapDiagnosticIsConsistent) {
  for (int a1 = 1; a1 <= 4; ++a1) {
    for (int a2 = 1; a2 <= 3; ++a2) {
      const DyckPath d(a1, a2);
      for (const auto& s1 : all_gradings(a1, 2)) {
        for (const auto& s2 : all_gradings(a2, 2)) {
          const bool differ = is_compatible(d, s1, s2, WrapConvention::Torus) !=
                              is_compatible(d, s1, s2, WrapConvention::NoWrap);
          ASSERT_EQ(wrap_sensitive(d, s1, s2), differ);
        }
      }
    }
  }
}
