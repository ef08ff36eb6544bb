#include "gcg/compat.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "gcg/error.hpp"

namespace gcg {

namespace {

void check_sizes(const DyckPath& path, const HGrading* s1, const VGrading* s2) {
  if (s1 && static_cast<int>(s1->size()) != path.a1()) {
    raise(ErrorCode::InvalidArgument, "horizontal grading has " + std::to_string(s1->size()) +
                                          " values for " + std::to_string(path.a1()) + " edges");
  }
  if (s2 && static_cast<int>(s2->size()) != path.a2()) {
    raise(ErrorCode::InvalidArgument, "vertical grading has " + std::to_string(s2->size()) +
                                          " values for " + std::to_string(path.a2()) + " edges");
  }
}

int at(const std::vector<int>& s, int index) { return s[static_cast<std::size_t>(index - 1)]; }

// Some edge e gives HGC or VGC for the pair at positions ph, pv.
bool pair_condition(const DyckPath& path, const HGrading& s1, const VGrading& s2, int ph, int pv) {
  const int n = path.length();
  const int len = ((pv - ph) % n + n) % n + 1;
  int f = 0;
  for (int m = 1; m < len; ++m) {
    const EdgeRef e = path.edge_at(ph + m - 1);
    f += e.kind == EdgeKind::Horizontal ? at(s1, e.index) : -1;
    if (f == 0) return true;
  }
  int g = 0;
  for (int m = 1; m < len; ++m) {
    const EdgeRef e = path.edge_at(pv - m + 1);
    g += e.kind == EdgeKind::Vertical ? at(s2, e.index) : -1;
    if (g == 0) return true;
  }
  return false;
}

bool advance(std::vector<int>& s, int max_value) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] < max_value) {
      ++s[i];
      return true;
    }
    s[i] = 0;
  }
  return false;
}

std::uint64_t grading_count(int a, int d) {
  std::uint64_t total = 1;
  for (int i = 0; i < a; ++i) {
    total *= static_cast<std::uint64_t>(d) + 1;
    if (total > (std::uint64_t{1} << 40)) raise(ErrorCode::InvalidArgument, "grading space too large");
  }
  return total;
}

std::vector<int> decode(std::uint64_t rank, int a, int d) {
  std::vector<int> s(static_cast<std::size_t>(a), 0);
  for (std::size_t i = s.size(); i-- > 0;) {
    s[i] = static_cast<int>(rank % (static_cast<std::uint64_t>(d) + 1));
    rank /= static_cast<std::uint64_t>(d) + 1;
  }
  return s;
}

void sort_edges(std::vector<EdgeRef>& edges) { std::sort(edges.begin(), edges.end()); }

template <typename Fn>
void run_partitioned(std::uint64_t total, int threads, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  if (workers == 1) {
    for (std::uint64_t r = 0; r < total; ++r) fn(r);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t r = static_cast<std::uint64_t>(w); r < total; r += static_cast<std::uint64_t>(workers)) fn(r);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int grading_size(const std::vector<int>& s) { return std::accumulate(s.begin(), s.end(), 0); }
int GradingPair::m1() const { return grading_size(s1); }
int GradingPair::m2() const { return grading_size(s2); }

int fstat_h(const DyckPath& path, const HGrading& s1, const Span& sub) {
  check_sizes(path, &s1, nullptr);
  int f = 0;
  for (int k = 0; k < sub.length; ++k) {
    const EdgeRef e = path.edge_at(sub.start + k);
    f += e.kind == EdgeKind::Horizontal ? at(s1, e.index) : -1;
  }
  return f;
}

int fstat_v(const DyckPath& path, const VGrading& s2, const Span& sub) {
  check_sizes(path, nullptr, &s2);
  int f = 0;
  for (int k = 0; k < sub.length; ++k) {
    const EdgeRef e = path.edge_at(sub.start + k);
    f += e.kind == EdgeKind::Vertical ? at(s2, e.index) : -1;
  }
  return f;
}

bool is_compatible(const DyckPath& path, const HGrading& s1, const VGrading& s2, WrapConvention wrap) {
  check_sizes(path, &s1, &s2);
  for (int j = 1; j <= path.a1(); ++j) {
    const int ph = path.position(path.h(j));
    for (int k = 1; k <= path.a2(); ++k) {
      const int pv = path.position(path.v(k));
      if (wrap == WrapConvention::NoWrap && ph > pv) continue;
      if (!pair_condition(path, s1, s2, ph, pv)) return false;
    }
  }
  return true;
}

bool wrap_sensitive(const DyckPath& path, const HGrading& s1, const VGrading& s2) {
  return is_compatible(path, s1, s2, WrapConvention::Torus) !=
         is_compatible(path, s1, s2, WrapConvention::NoWrap);
}

LocalShadow local_shadow_h(const DyckPath& path, int j, const HGrading& s1) {
  check_sizes(path, &s1, nullptr);
  const int n = path.length();
  const int start = path.position(path.h(j));
  int f = 0;
  for (int m = 1; m <= n; ++m) {
    const EdgeRef e = path.edge_at(start + m - 1);
    f += e.kind == EdgeKind::Horizontal ? at(s1, e.index) : -1;
    if (f == 0) return {false, {start, m}};
  }
  return {true, {start, n}};
}

LocalShadow local_shadow_v(const DyckPath& path, int j, const VGrading& s2) {
  check_sizes(path, nullptr, &s2);
  const int n = path.length();
  const int end = path.position(path.v(j));
  int g = 0;
  for (int m = 1; m <= n; ++m) {
    const EdgeRef e = path.edge_at(end - m + 1);
    g += e.kind == EdgeKind::Vertical ? at(s2, e.index) : -1;
    if (g == 0) return {false, {((end - m + 1) % n + n) % n, m}};
  }
  return {true, {(end + 1) % n, n}};
}

ShadowReport shadow_report_h(const DyckPath& path, const HGrading& s1) {
  check_sizes(path, &s1, nullptr);
  const int a1 = path.a1(), a2 = path.a2();
  ShadowReport report;
  std::vector<std::vector<char>> member(static_cast<std::size_t>(a1) + 1,
                                        std::vector<char>(static_cast<std::size_t>(a2) + 1, 0));
  std::vector<char> in_shadow(static_cast<std::size_t>(a2) + 1, 0);
  for (int j = 1; j <= a1; ++j) {
    report.local.push_back(local_shadow_h(path, j, s1));
    for (const EdgeRef& e : path.edges_in(report.local.back().path)) {
      if (e.kind != EdgeKind::Vertical) continue;
      member[static_cast<std::size_t>(j)][static_cast<std::size_t>(e.index)] = 1;
      in_shadow[static_cast<std::size_t>(e.index)] = 1;
    }
  }
  std::vector<char> removed(static_cast<std::size_t>(a2) + 1, 0);
  for (int d = 1; d <= a1; ++d) {
    int pos = path.position(path.h(d)) + 1;
    for (int count = 0; count < at(s1, d); ++count, ++pos) {
      const EdgeRef e = path.edge_at(pos);
      if (e.kind != EdgeKind::Vertical || path.depth(e.index) != d) break;
      removed[static_cast<std::size_t>(e.index)] = 1;
    }
  }
  for (int k = 1; k <= a2; ++k) {
    if (!in_shadow[static_cast<std::size_t>(k)]) continue;
    report.shadow.push_back(path.v(k));
    if (removed[static_cast<std::size_t>(k)]) continue;
    report.remote_shadow.push_back(path.v(k));
    const int pv = path.position(path.v(k));
    int owner = 0;
    for (int step = 1; step <= path.length() && owner == 0; ++step) {
      const EdgeRef e = path.edge_at(pv - step);
      if (e.kind == EdgeKind::Horizontal && member[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(k)]) {
        owner = e.index;
      }
    }
    if (owner == 0) raise(ErrorCode::Internal, "shadow edge without an owning local shadow");
    report.partition[{owner, path.depth(k)}].push_back(path.v(k));
  }
  sort_edges(report.shadow);
  sort_edges(report.remote_shadow);
  return report;
}

ShadowReport shadow_report_v(const DyckPath& path, const VGrading& s2) {
  check_sizes(path, nullptr, &s2);
  const int a1 = path.a1(), a2 = path.a2();
  ShadowReport report;
  std::vector<std::vector<char>> member(static_cast<std::size_t>(a2) + 1,
                                        std::vector<char>(static_cast<std::size_t>(a1) + 1, 0));
  std::vector<char> in_shadow(static_cast<std::size_t>(a1) + 1, 0);
  for (int k = 1; k <= a2; ++k) {
    report.local.push_back(local_shadow_v(path, k, s2));
    for (const EdgeRef& e : path.edges_in(report.local.back().path)) {
      if (e.kind != EdgeKind::Horizontal) continue;
      member[static_cast<std::size_t>(k)][static_cast<std::size_t>(e.index)] = 1;
      in_shadow[static_cast<std::size_t>(e.index)] = 1;
    }
  }
  std::vector<char> removed(static_cast<std::size_t>(a1) + 1, 0);
  for (int ell = 1; ell <= a2; ++ell) {
    int pos = path.position(path.v(ell)) - 1;
    for (int count = 0; count < at(s2, ell); ++count, --pos) {
      const EdgeRef e = path.edge_at(pos);
      if (e.kind != EdgeKind::Horizontal || path.height(e.index) != ell - 1) break;
      removed[static_cast<std::size_t>(e.index)] = 1;
    }
  }
  for (int j = 1; j <= a1; ++j) {
    if (!in_shadow[static_cast<std::size_t>(j)]) continue;
    report.shadow.push_back(path.h(j));
    if (removed[static_cast<std::size_t>(j)]) continue;
    report.remote_shadow.push_back(path.h(j));
    const int ph = path.position(path.h(j));
    int owner = 0;
    for (int step = 1; step <= path.length() && owner == 0; ++step) {
      const EdgeRef e = path.edge_at(ph + step);
      if (e.kind == EdgeKind::Vertical && member[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(j)]) {
        owner = e.index;
      }
    }
    if (owner == 0) raise(ErrorCode::Internal, "shadow edge without an owning local shadow");
    report.partition[{owner, path.height(j)}].push_back(path.h(j));
  }
  sort_edges(report.shadow);
  sort_edges(report.remote_shadow);
  return report;
}

namespace {

// Pairs (A, B) = (f(h hbar_{d+1}), f(h_j hbar)) for h strictly between h_j and h_{d+1}.
std::vector<std::pair<int, int>> criterion_terms_h(const DyckPath& path, const HGrading& s1, int j, int d) {
  check_sizes(path, &s1, nullptr);
  const int a1 = path.a1();
  if (j < 1 || j > a1 || d < 1 || d > a1 || j == d) {
    raise(ErrorCode::IndexOutOfRange, "remote block needs 1 <= j, d <= a1 and j != d");
  }
  std::vector<std::pair<int, int>> terms;
  const int between = ((d - j) % a1 + a1) % a1;
  for (int k = 1; k <= between; ++k) {
    const EdgeRef h = path.h(j + k);
    terms.emplace_back(fstat_h(path, s1, Subpath{h, path.h(d + 1), true, false}),
                       fstat_h(path, s1, Subpath{path.h(j), h, true, false}));
  }
  return terms;
}

// Pairs (A, B) = (f(vbar_l v), f(vbar v_j)) for v strictly between v_l and v_j.
std::vector<std::pair<int, int>> criterion_terms_v(const DyckPath& path, const VGrading& s2, int j, int ell) {
  check_sizes(path, nullptr, &s2);
  const int a2 = path.a2();
  if (j < 1 || j > a2 || ell < 0 || ell >= a2 || (j - ell - 1) % a2 == 0) {
    raise(ErrorCode::IndexOutOfRange, "remote block needs 0 <= l < a2, 1 <= j <= a2 and j != l + 1");
  }
  std::vector<std::pair<int, int>> terms;
  const int between = ((j - 1 - ell) % a2 + a2) % a2;
  for (int k = 1; k <= between; ++k) {
    const EdgeRef v = path.v(ell + k);
    terms.emplace_back(fstat_v(path, s2, Subpath{path.v(ell), v, false, true}),
                       fstat_v(path, s2, Subpath{v, path.v(j), false, true}));
  }
  return terms;
}

bool criterion_holds(const std::vector<std::pair<int, int>>& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.first < 0 && 0 < t.second; });
}

int block_size(const std::vector<std::pair<int, int>>& terms) {
  if (!criterion_holds(terms)) raise(ErrorCode::CriterionFails, "remote block is empty");
  int size = -1;
  for (const auto& [a, b] : terms) {
    const int m = std::min(-a, b);
    size = size < 0 ? m : std::min(size, m);
  }
  return size;
}

}  // namespace

bool rsh_criterion_h(const DyckPath& path, const HGrading& s1, int j, int d) {
  return criterion_holds(criterion_terms_h(path, s1, j, d));
}

bool rsh_criterion_v(const DyckPath& path, const VGrading& s2, int j, int ell) {
  return criterion_holds(criterion_terms_v(path, s2, j, ell));
}

int rsh_block_size_h(const DyckPath& path, const HGrading& s1, int j, int d) {
  return block_size(criterion_terms_h(path, s1, j, d));
}

int rsh_block_size_v(const DyckPath& path, const VGrading& s2, int j, int ell) {
  return block_size(criterion_terms_v(path, s2, j, ell));
}

std::vector<GradingPair> enumerate_bruteforce(int a1, int a2, int d1, int d2) {
  if (d1 < 0 || d2 < 0) raise(ErrorCode::InvalidArgument, "degrees must be nonnegative");
  const DyckPath path(a1, a2);
  grading_count(a1, d1);
  grading_count(a2, d2);
  std::vector<GradingPair> out;
  VGrading s2(static_cast<std::size_t>(a2), 0);
  do {
    HGrading s1(static_cast<std::size_t>(a1), 0);
    do {
      if (is_compatible(path, s1, s2)) out.push_back({s1, s2});
    } while (advance(s1, d1));
  } while (advance(s2, d2));
  return out;
}

std::vector<VerticalClass> vertical_classes(int a1, int a2, int d1, int d2, int threads) {
  if (d1 < 0 || d2 < 0) raise(ErrorCode::InvalidArgument, "degrees must be nonnegative");
  const DyckPath path(a1, a2);
  const std::uint64_t total = grading_count(a2, d2);
  std::vector<VerticalClass> classes(static_cast<std::size_t>(total));
  run_partitioned(total, threads, [&](std::uint64_t rank) {
    VerticalClass& c = classes[static_cast<std::size_t>(rank)];
    c.s2 = decode(rank, a2, d2);
    const ShadowReport report = shadow_report_v(path, c.s2);
    std::vector<char> shadowed(static_cast<std::size_t>(a1) + 1, 0);
    for (const auto& e : report.shadow) shadowed[static_cast<std::size_t>(e.index)] = 1;
    for (int j = 1; j <= a1; ++j) {
      if (!shadowed[static_cast<std::size_t>(j)]) c.free_edges.push_back(j);
    }
    for (const auto& e : report.remote_shadow) c.remote_edges.push_back(e.index);
    std::vector<int> support_v;
    for (int k = 1; k <= a2; ++k) {
      if (at(c.s2, k) > 0) support_v.push_back(path.position(path.v(k)));
    }
    std::vector<int> values(c.remote_edges.size(), 0);
    HGrading s1(static_cast<std::size_t>(a1), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < values.size(); ++i) s1[static_cast<std::size_t>(c.remote_edges[i] - 1)] = values[i];
      for (std::size_t i = 0; i < values.size() && ok; ++i) {
        if (values[i] == 0) continue;
        const int ph = path.position(path.h(c.remote_edges[i]));
        for (int pv : support_v) {
          if (!pair_condition(path, s1, c.s2, ph, pv)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) c.remote_values.push_back(values);
    } while (advance(values, d1));
  });
  return classes;
}

std::vector<HGrading> expand_class(const VerticalClass& c, int a1, int d1) {
  std::vector<HGrading> out;
  std::vector<int> free_values(c.free_edges.size(), 0);
  for (const auto& remote : c.remote_values) {
    std::fill(free_values.begin(), free_values.end(), 0);
    do {
      HGrading s1(static_cast<std::size_t>(a1), 0);
      for (std::size_t i = 0; i < remote.size(); ++i) s1[static_cast<std::size_t>(c.remote_edges[i] - 1)] = remote[i];
      for (std::size_t i = 0; i < free_values.size(); ++i) s1[static_cast<std::size_t>(c.free_edges[i] - 1)] = free_values[i];
      out.push_back(std::move(s1));
    } while (advance(free_values, d1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GradingPair> enumerate_fast(int a1, int a2, int d1, int d2, int threads) {
  std::vector<GradingPair> out;
  for (const auto& c : vertical_classes(a1, a2, d1, d2, threads)) {
    for (auto& s1 : expand_class(c, a1, d1)) out.push_back({std::move(s1), c.s2});
  }
  return out;
}

VGrading phi_pullback(const DyckPath& path, const VGrading& s2, int r) {
  check_sizes(path, nullptr, &s2);
  const int a1 = path.a1(), a2 = path.a2();
  if (a2 < 1) raise(ErrorCode::InvalidArgument, "phi pullback needs at least one vertical edge");
  const int max_value = s2.empty() ? 0 : *std::max_element(s2.begin(), s2.end());
  if (r < max_value || static_cast<long>(r) * a2 < a1) {
    raise(ErrorCode::RTooSmall, "r = " + std::to_string(r) + " is below max(S2) or ceil(a1/a2)");
  }
  VGrading out(static_cast<std::size_t>(a2));
  for (int j = 1; j <= a2; ++j) out[static_cast<std::size_t>(j - 1)] = r - at(s2, a2 + 1 - j);
  return out;
}

HGrading omega(const DyckPath& path, const HGrading& s1, const VGrading& s2, int r) {
  check_sizes(path, &s1, &s2);
  const ShadowReport report = shadow_report_v(path, s2);
  std::vector<char> remote(static_cast<std::size_t>(path.a1()) + 1, 0);
  for (const auto& e : report.remote_shadow) remote[static_cast<std::size_t>(e.index)] = 1;
  for (int j = 1; j <= path.a1(); ++j) {
    if (at(s1, j) != 0 && !remote[static_cast<std::size_t>(j)]) {
      raise(ErrorCode::NotInRemoteSupport, "h" + std::to_string(j) + " lies outside the remote shadow");
    }
  }
  const VGrading image_s2 = phi_pullback(path, s2, r);
  const int a2 = path.a2();
  const DyckPath image_path(r * a2 - path.a1(), a2);
  const ShadowReport image = shadow_report_v(image_path, image_s2);
  HGrading out(static_cast<std::size_t>(image_path.a1()), 0);
  for (const auto& [key, block] : report.partition) {
    const auto [j, ell] = key;
    auto it = image.partition.find({a2 - ell, a2 - j});
    if (it == image.partition.end() || it->second.size() != block.size()) {
      raise(ErrorCode::Internal, "remote blocks do not correspond under phi");
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      out[static_cast<std::size_t>(it->second[i].index - 1)] = at(s1, block[i].index);
    }
  }
  return out;
}

namespace {

struct Point {
  std::int64_t x, y;
  bool operator==(const Point&) const = default;
};

std::int64_t cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool in_triangle(Point a, Point b, Point c, Point p) {
  const std::int64_t c1 = cross(a, b, p), c2 = cross(b, c, p), c3 = cross(c, a, p);
  const bool has_neg = c1 < 0 || c2 < 0 || c3 < 0;
  const bool has_pos = c1 > 0 || c2 > 0 || c3 > 0;
  return !(has_neg && has_pos);
}

bool on_segment(Point a, Point b, Point p) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool support_region(std::int64_t d1, std::int64_t d2, std::int64_t a1, std::int64_t a2,
                    std::int64_t m1, std::int64_t m2) {
  if (a1 < 0 || a2 < 0 || d1 < 0 || d2 < 0) raise(ErrorCode::InvalidArgument, "support region needs nonnegative data");
  if (m1 < 0 || m2 < 0) return false;
  if (d2 * a2 <= a1) return m2 <= d2 * a2 && m1 <= d1 * a1 - d1 * m2;
  if (d1 * a1 <= a2) return m1 <= d1 * a1 && m2 <= d2 * a2 - d2 * m1;
  const Point o{0, 0}, a{d1 * a1, 0}, b{a2, a1}, c{0, d2 * a2}, p{m1, m2};
  if (on_segment(a, b, p) && !(p == a)) return false;
  if (on_segment(c, b, p) && !(p == c)) return false;
  return in_triangle(o, a, b, p) || in_triangle(o, b, c, p);
}

}  // namespace gcg
