#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gcg {

enum class EdgeKind : unsigned char { Horizontal, Vertical };

struct EdgeRef {
  EdgeKind kind = EdgeKind::Horizontal;
  int index = 1;  // 1-based, canonical modulo a1 (horizontal) or a2 (vertical)
  auto operator<=>(const EdgeRef&) const = default;
};

std::string to_string(EdgeRef e);

// Path from start to end, either endpoint optionally excluded (the barred
// forms). When start lies after end the path wraps through the origin.
struct Subpath {
  EdgeRef start;
  EdgeRef end;
  bool include_start = true;
  bool include_end = true;
};

// A run of consecutive edges in path order: positions start, start + 1, ...
// taken cyclically. Length ranges over [0, a1 + a2].
struct Span {
  int start = 0;
  int length = 0;
};

class DyckPath {
 public:
  DyckPath() = default;
  DyckPath(int a1, int a2);

  int a1() const { return a1_; }
  int a2() const { return a2_; }
  int length() const { return a1_ + a2_; }
  const std::vector<EdgeRef>& edges() const { return edges_; }

  EdgeRef h(int j) const;
  EdgeRef v(int j) const;
  int height(int j) const;  // of h_j
  int depth(int j) const;   // of v_j
  int position(EdgeRef e) const;
  EdgeRef edge_at(int pos) const;

  Span span(const Subpath& s) const;
  Span span(EdgeRef start, EdgeRef end) const { return span(Subpath{start, end}); }
  int count_h(const Span& s) const;
  int count_v(const Span& s) const;
  int count_h(const Subpath& s) const { return count_h(span(s)); }
  int count_v(const Subpath& s) const { return count_v(span(s)); }
  std::vector<EdgeRef> edges_in(const Span& s) const;

  // |(h_i h_j)_2| and |(v_i v_j)_1| for i <= j.
  int vertical_distance(int i, int j) const;
  int horizontal_distance(int i, int j) const;

  std::string render() const;

 private:
  int a1_ = 0;
  int a2_ = 0;
  std::vector<EdgeRef> edges_;
  std::vector<int> h_pos_, v_pos_;
  std::vector<int> h_prefix_;  // horizontal count in positions [0, p), p < 2n
};

}  // namespace gcg
