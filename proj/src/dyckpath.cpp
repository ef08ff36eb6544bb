#include "gcg/dyckpath.hpp"

#include "gcg/error.hpp"

namespace gcg {

namespace {

int canonical(int j, int a) { return ((j - 1) % a + a) % a + 1; }

// Floor and ceiling of num / den for den > 0.
long floor_div(long num, long den) { return num >= 0 ? num / den : -((-num + den - 1) / den); }
long ceil_div(long num, long den) { return -floor_div(-num, den); }

}  // namespace

std::string to_string(EdgeRef e) {
  return (e.kind == EdgeKind::Horizontal ? "h" : "v") + std::to_string(e.index);
}

DyckPath::DyckPath(int a1, int a2) : a1_(a1), a2_(a2) {
  if (a1 < 0 || a2 < 0) raise(ErrorCode::InvalidArgument, "Dyck path sizes must be nonnegative");
  h_pos_.assign(static_cast<std::size_t>(a1) + 1, -1);
  v_pos_.assign(static_cast<std::size_t>(a2) + 1, -1);
  int next_v = 1;
  auto place_vertical_up_to = [&](int x) {
    while (next_v <= a2 && depth(next_v) <= x) {
      v_pos_[static_cast<std::size_t>(next_v)] = static_cast<int>(edges_.size());
      edges_.push_back({EdgeKind::Vertical, next_v++});
    }
  };
  for (int j = 1; j <= a1; ++j) {
    place_vertical_up_to(j - 1);
    h_pos_[static_cast<std::size_t>(j)] = static_cast<int>(edges_.size());
    edges_.push_back({EdgeKind::Horizontal, j});
  }
  place_vertical_up_to(a1);
  const int n = length();
  h_prefix_.assign(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int p = 0; p < 2 * n; ++p) {
    h_prefix_[static_cast<std::size_t>(p) + 1] =
        h_prefix_[static_cast<std::size_t>(p)] + (edges_[static_cast<std::size_t>(p % n)].kind == EdgeKind::Horizontal ? 1 : 0);
  }
}

EdgeRef DyckPath::h(int j) const {
  if (a1_ == 0) raise(ErrorCode::IndexOutOfRange, "path has no horizontal edges");
  return {EdgeKind::Horizontal, canonical(j, a1_)};
}

EdgeRef DyckPath::v(int j) const {
  if (a2_ == 0) raise(ErrorCode::IndexOutOfRange, "path has no vertical edges");
  return {EdgeKind::Vertical, canonical(j, a2_)};
}

int DyckPath::height(int j) const {
  return static_cast<int>(floor_div(static_cast<long>(canonical(j, a1_) - 1) * a2_, a1_));
}

int DyckPath::depth(int j) const {
  if (a1_ == 0) return 0;
  return static_cast<int>(ceil_div(static_cast<long>(canonical(j, a2_)) * a1_, a2_));
}

int DyckPath::position(EdgeRef e) const {
  if (e.kind == EdgeKind::Horizontal) return h_pos_[static_cast<std::size_t>(h(e.index).index)];
  return v_pos_[static_cast<std::size_t>(v(e.index).index)];
}

EdgeRef DyckPath::edge_at(int pos) const {
  const int n = length();
  if (n == 0) raise(ErrorCode::IndexOutOfRange, "empty path");
  return edges_[static_cast<std::size_t>(((pos % n) + n) % n)];
}

Span DyckPath::span(const Subpath& s) const {
  const int n = length();
  if (n == 0) raise(ErrorCode::IndexOutOfRange, "empty path has no subpaths");
  const int p0 = position(s.start);
  const int p1 = position(s.end);
  int start = p0;
  int len = ((p1 - p0) % n + n) % n + 1;
  if (!s.include_start) {
    start = (start + 1) % n;
    --len;
  }
  if (!s.include_end) --len;
  return {start, len < 0 ? 0 : len};
}

int DyckPath::count_h(const Span& s) const {
  const int n = length();
  if (n == 0 || s.length == 0) return 0;
  const int start = ((s.start % n) + n) % n;
  return h_prefix_[static_cast<std::size_t>(start + s.length)] - h_prefix_[static_cast<std::size_t>(start)];
}

int DyckPath::count_v(const Span& s) const { return s.length - count_h(s); }

std::vector<EdgeRef> DyckPath::edges_in(const Span& s) const {
  std::vector<EdgeRef> out;
  for (int k = 0; k < s.length; ++k) out.push_back(edge_at(s.start + k));
  return out;
}

int DyckPath::vertical_distance(int i, int j) const {
  if (i < 1 || j > a1_ || i > j) {
    raise(ErrorCode::IndexOutOfRange, "vertical_distance needs 1 <= i <= j <= a1");
  }
  return height(j) - height(i);
}

int DyckPath::horizontal_distance(int i, int j) const {
  if (i < 1 || j > a2_ || i > j) {
    raise(ErrorCode::IndexOutOfRange, "horizontal_distance needs 1 <= i <= j <= a2");
  }
  return depth(j) - depth(i);
}

std::string DyckPath::render() const {
  // Rows top to bottom; '_' marks a horizontal edge, '|' a vertical one.
  std::vector<std::string> rows(static_cast<std::size_t>(a2_) + 1,
                                std::string(static_cast<std::size_t>(a1_) + 1, ' '));
  int x = 0, y = 0;
  for (const auto& e : edges_) {
    if (e.kind == EdgeKind::Horizontal) {
      rows[static_cast<std::size_t>(a2_ - y)][static_cast<std::size_t>(x)] = '_';
      ++x;
    } else {
      ++y;
      rows[static_cast<std::size_t>(a2_ - y)][static_cast<std::size_t>(x)] = '|';
    }
  }
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

}  // namespace gcg
