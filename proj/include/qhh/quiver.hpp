#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

// Finite quiver.  Vertex ids are arbitrary integers, stored strictly
// increasing; arrows keep their declaration order, which is the canonical
// arrow order used everywhere (pair bases, spanning forests, reports).
class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<int> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    if (vertices_.empty()) throw ValidationError("quiver needs at least one vertex");
    for (size_t i = 1; i < vertices_.size(); ++i)
      if (vertices_[i] <= vertices_[i - 1])
        throw ValidationError("vertex ids must be strictly increasing");
    for (size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < arrows_.size(); ++i) {
      const Arrow& a = arrows_[i];
      if (a.name.empty()) throw ValidationError("arrow with empty name");
      if (!vertex_index_.count(a.source) || !vertex_index_.count(a.target))
        throw ValidationError("arrow '" + a.name + "' uses an undeclared vertex");
      if (!arrow_index_.emplace(a.name, static_cast<int>(i)).second)
        throw ValidationError("duplicate arrow name '" + a.name + "'");
    }
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int i) const { return arrows_[i]; }

  bool has_vertex(int id) const { return vertex_index_.count(id) != 0; }

  int vertex_index(int id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
      throw ValidationError("unknown vertex id " + std::to_string(id));
    return it->second;
  }

  std::optional<int> arrow_index(const std::string& name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }

  // Undirected connected components; entry per vertex position, labels are
  // 0-based in order of first appearance.
  std::vector<int> components() const {
    std::vector<int> parent(vertices_.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Arrow& a : arrows_) {
      int u = find(vertex_index(a.source)), v = find(vertex_index(a.target));
      if (u != v) parent[u] = v;
    }
    std::vector<int> label(vertices_.size(), -1);
    int next = 0;
    for (size_t i = 0; i < vertices_.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (label[r] < 0) label[r] = next++;
      label[i] = label[r];
    }
    return label;
  }

  int component_count() const {
    std::vector<int> c = components();
    return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
  }

  // First Betti number of the underlying graph: arrows - vertices + components.
  int betti() const { return arrow_count() - vertex_count() + component_count(); }

  // Every arrow strictly ascends vertex ids (hence the quiver is acyclic).
  bool is_directed() const {
    for (const Arrow& a : arrows_)
      if (a.source >= a.target) return false;
    return true;
  }

  // Partition of arrow indices by (source, target), classes ordered by the
  // vertex order of their endpoints, members in declaration order.
  std::vector<std::vector<int>> parallel_classes() const {
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (size_t i = 0; i < arrows_.size(); ++i)
      by_ends[{vertex_index(arrows_[i].source), vertex_index(arrows_[i].target)}].push_back(
          static_cast<int>(i));
    std::vector<std::vector<int>> classes;
    for (auto& [ends, members] : by_ends) classes.push_back(std::move(members));
    return classes;
  }

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::map<int, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

// A path in a quiver: the arrows it traverses in application order (entry 0
// acts first), plus endpoints so that trivial paths know their vertex.  In the
// usual right-to-left notation the word reads reversed: "b*a" as a path means
// the composite ab.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  bool is_cycle() const { return source == target; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.arrows == b.arrows;
  }
};

inline Path trivial_path(int vertex) { return Path{vertex, vertex, {}}; }

inline Path arrow_path(const Quiver& q, int arrow) {
  const Arrow& a = q.arrow(arrow);
  return Path{a.source, a.target, {arrow}};
}

// Builds a path from arrows in application order, validating composability.
inline Path make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw ValidationError("make_path needs at least one arrow");
  for (size_t i = 1; i < arrows.size(); ++i)
    if (q.arrow(arrows[i - 1]).target != q.arrow(arrows[i]).source)
      throw ValidationError("arrows '" + q.arrow(arrows[i - 1]).name + "' and '" +
                            q.arrow(arrows[i]).name + "' do not compose");
  return Path{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, arrows};
}

// first, then: concatenation in application order.
inline Path chain(const Path& first, const Path& then) {
  if (first.target != then.source) throw ValidationError("paths do not compose");
  Path p;
  p.source = first.source;
  p.target = then.target;
  p.arrows = first.arrows;
  p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
  return p;
}

// Canonical path order: length, then lexicographic on the arrow index
// sequence; trivial paths by vertex id.
inline bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

inline bool parallel(const Path& a, const Path& b) {
  return a.source == b.source && a.target == b.target;
}

inline std::string path_str(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e" + std::to_string(p.source);
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

// Subquiver on the same vertices spanned by the given arrows (indices into
// q's arrow list, in increasing order).
inline Quiver arrow_subquiver(const Quiver& q, const std::vector<int>& arrows) {
  std::vector<Arrow> sub;
  for (int i : arrows) sub.push_back(q.arrow(i));
  return Quiver(q.vertices(), std::move(sub));
}

// Arrows of q not in the given set, as indices in increasing order.
inline std::vector<int> complement_arrows(const Quiver& q, const std::vector<bool>& in_sub) {
  std::vector<int> rest;
  for (int i = 0; i < q.arrow_count(); ++i)
    if (!in_sub[i]) rest.push_back(i);
  return rest;
}

inline Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) arrows.push_back({a.name + "*", a.target, a.source});
  return Quiver(q.vertices(), std::move(arrows));
}

}  // namespace qhh
