#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/cochain.hpp"
#include "qhh/errors.hpp"
#include "qhh/relative.hpp"

namespace qhh {

// Spanning data for the fundamental group of the ambient quiver contracted by
// the subalgebra quiver.  The tree is grown Kruskal-style scanning B's arrows
// first and the rest second, so it always contains a spanning forest of B
// extended to one of A; the generators of the contracted group are the
// leftover arrows outside both the tree and B.  Scanning order within the two
// blocks is declaration order, or reversed when alternate is set (used to
// check that reported invariants do not depend on the tree).
struct FundGroup {
  std::vector<bool> in_tree;   // per ambient arrow
  std::vector<int> tree;       // tree arrow indices
  std::vector<int> generators; // non-tree arrows outside B
  std::vector<int> component;  // per vertex position, component of the ambient quiver
  std::vector<int> basepoint;  // per component, vertex position
  int betti_a = 0;
  int betti_b = 0;
  int contracted_rank = 0;
};

inline FundGroup build_fundgroup(const SubalgebraPair& pair, bool alternate = false) {
  const Quiver& q = pair.a.quiver();
  FundGroup fg;
  fg.in_tree.assign(static_cast<size_t>(q.arrow_count()), false);

  std::vector<int> order;
  for (int i = 0; i < q.arrow_count(); ++i)
    if (pair.in_b[static_cast<size_t>(i)]) order.push_back(i);
  size_t nb = order.size();
  for (int i = 0; i < q.arrow_count(); ++i)
    if (!pair.in_b[static_cast<size_t>(i)]) order.push_back(i);
  if (alternate) {
    std::reverse(order.begin(), order.begin() + static_cast<long>(nb));
    std::reverse(order.begin() + static_cast<long>(nb), order.end());
  }

  std::vector<int> parent(static_cast<size_t>(q.vertex_count()));
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (int i : order) {
    int u = find(q.vertex_index(q.arrow(i).source));
    int v = find(q.vertex_index(q.arrow(i).target));
    if (u == v) continue;
    parent[static_cast<size_t>(u)] = v;
    fg.in_tree[static_cast<size_t>(i)] = true;
    fg.tree.push_back(i);
  }
  std::sort(fg.tree.begin(), fg.tree.end());
  for (int i = 0; i < q.arrow_count(); ++i)
    if (!fg.in_tree[static_cast<size_t>(i)] && !pair.in_b[static_cast<size_t>(i)])
      fg.generators.push_back(i);

  fg.component = q.components();
  int nc = q.component_count();
  fg.basepoint.assign(static_cast<size_t>(nc), -1);
  for (size_t v = 0; v < fg.component.size(); ++v)
    if (fg.basepoint[static_cast<size_t>(fg.component[v])] < 0)
      fg.basepoint[static_cast<size_t>(fg.component[v])] = static_cast<int>(v);

  fg.betti_a = q.betti();
  fg.betti_b = pair.b.quiver().betti();
  fg.contracted_rank = fg.betti_a - fg.betti_b;
  if (fg.contracted_rank != static_cast<int>(fg.generators.size()))
    throw VerificationError("contracted rank disagrees with the number of free generators");
  return fg;
}

// One step of a walk in the underlying graph: an arrow traversed forward
// (dir = +1, source to target) or backward (dir = -1).
struct WalkStep {
  int arrow = 0;
  int dir = 1;
};

inline int step_from(const Quiver& q, const WalkStep& s) {
  return s.dir > 0 ? q.arrow(s.arrow).source : q.arrow(s.arrow).target;
}
inline int step_to(const Quiver& q, const WalkStep& s) {
  return s.dir > 0 ? q.arrow(s.arrow).target : q.arrow(s.arrow).source;
}

inline void check_walk(const Quiver& q, const std::vector<WalkStep>& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (step_to(q, w[i - 1]) != step_from(q, w[i]))
      throw NotAWalk("walk steps do not chain at " + q.arrow(w[i].arrow).name);
}

// Unique walk between two vertices through tree arrows only (breadth-first in
// the undirected tree).  Vertices in different components have no such walk.
inline std::vector<WalkStep> tree_walk(const Quiver& q, const std::vector<bool>& in_tree,
                                       int from_id, int to_id) {
  int from = q.vertex_index(from_id), to = q.vertex_index(to_id);
  std::vector<std::pair<int, WalkStep>> pred(static_cast<size_t>(q.vertex_count()), {-2, {}});
  pred[static_cast<size_t>(from)] = {-1, {}};
  std::deque<int> queue{from};
  while (!queue.empty() && pred[static_cast<size_t>(to)].first == -2) {
    int v = queue.front();
    queue.pop_front();
    for (int i = 0; i < q.arrow_count(); ++i) {
      if (!in_tree[static_cast<size_t>(i)]) continue;
      int s = q.vertex_index(q.arrow(i).source), t = q.vertex_index(q.arrow(i).target);
      int w = -1, dir = 0;
      if (s == v) w = t, dir = 1;
      else if (t == v) w = s, dir = -1;
      else continue;
      if (pred[static_cast<size_t>(w)].first != -2) continue;
      pred[static_cast<size_t>(w)] = {v, {i, dir}};
      queue.push_back(w);
    }
  }
  if (pred[static_cast<size_t>(to)].first == -2)
    throw NotAWalk("vertices " + std::to_string(from_id) + " and " + std::to_string(to_id) +
                   " are not connected by the tree");
  std::vector<WalkStep> walk;
  for (int v = to; v != from; v = pred[static_cast<size_t>(v)].first)
    walk.push_back(pred[static_cast<size_t>(v)].second);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

// The closed walk representing one free generator: basepoint to the arrow's
// source through the tree, the arrow itself, then back to the basepoint.
inline std::vector<WalkStep> generator_walk(const SubalgebraPair& pair, const FundGroup& fg,
                                            int gen_arrow, int basepoint_id) {
  const Quiver& q = pair.a.quiver();
  std::vector<WalkStep> walk = tree_walk(q, fg.in_tree, basepoint_id, q.arrow(gen_arrow).source);
  walk.push_back({gen_arrow, 1});
  auto back = tree_walk(q, fg.in_tree, q.arrow(gen_arrow).target, basepoint_id);
  walk.insert(walk.end(), back.begin(), back.end());
  check_walk(q, walk);
  return walk;
}

inline int default_basepoint_id(const Quiver& q, const FundGroup& fg, int gen_arrow) {
  int c = fg.component[static_cast<size_t>(q.vertex_index(q.arrow(gen_arrow).source))];
  return q.vertices()[static_cast<size_t>(fg.basepoint[static_cast<size_t>(c)])];
}

// Image of a walk in the free group on the contracted generators: tree and
// subalgebra arrows vanish, everything else maps to a signed letter, and the
// word is freely reduced.  Letters are ±(position in fg.generators + 1).
inline std::vector<int> walk_word(const SubalgebraPair& pair, const FundGroup& fg,
                                  const std::vector<WalkStep>& walk) {
  check_walk(pair.a.quiver(), walk);
  std::map<int, int> gen_pos;
  for (size_t k = 0; k < fg.generators.size(); ++k)
    gen_pos[fg.generators[k]] = static_cast<int>(k);
  std::vector<int> word;
  for (const WalkStep& s : walk) {
    if (fg.in_tree[static_cast<size_t>(s.arrow)] || pair.in_b[static_cast<size_t>(s.arrow)])
      continue;
    auto it = gen_pos.find(s.arrow);
    if (it == gen_pos.end())
      throw NotAWalk("walk uses arrow '" + pair.a.quiver().arrow(s.arrow).name +
                     "' outside the tree, the subalgebra, and the generators");
    int letter = s.dir * (it->second + 1);
    if (!word.empty() && word.back() == -letter)
      word.pop_back();
    else
      word.push_back(letter);
  }
  return word;
}

// The pullback of the contracted fundamental group into relative degree-one
// cohomology: each free generator g maps to the class of the pair g//g.  That
// vector lies in the relative kernel by construction (substituting an arrow
// for itself reproduces each relation, which then dies), and this is enforced.
template <class F>
struct ThetaResult {
  std::vector<int> generators;
  std::vector<std::vector<F>> images;      // relative cohomology coordinates per generator
  Subspace<F> image_span;                  // span of the above
  bool injective = false;
  bool commutes = false;                   // embedding ∘ relative = absolute on generators
  bool image_dim_equals_rank = false;
};

template <class F>
ThetaResult<F> theta_map(const CochainComplex<F>& cx, const SubalgebraPair& pair,
                         const FundGroup& fg, const RelativeHh1<F>& rel, const Hh1<F>& abs,
                         const RelativeEmbedding<F>& emb) {
  ThetaResult<F> out;
  out.generators = fg.generators;
  out.commutes = true;
  const MonomialAlgebra& alg = cx.algebra();
  for (int g : fg.generators) {
    std::vector<F> v(static_cast<size_t>(cx.p1.dim()), F{});
    auto bi = alg.basis_index(arrow_path(alg.quiver(), g));
    if (!bi)
      throw ImageNotInRelativeKernel("generator arrow '" + alg.quiver().arrow(g).name +
                                     "' is not a basis path");
    v[static_cast<size_t>(*cx.p1.index(g, *bi))] = F{1};
    if (!rel.ker.contains(v))
      throw ImageNotInRelativeKernel("image of generator '" + alg.quiver().arrow(g).name +
                                     "' is not a relative cocycle");
    std::vector<F> rc, ac;
    if (!rel.h.coordinates(v, rc) || !abs.h.coordinates(v, ac))
      throw ImageNotInRelativeKernel("image of generator '" + alg.quiver().arrow(g).name +
                                     "' has no cohomology coordinates");
    std::vector<F> lifted = emb.matrix.apply(rc);
    for (size_t k = 0; k < ac.size(); ++k)
      if (!is_zero(lifted[k] - ac[k])) out.commutes = false;
    out.images.push_back(std::move(rc));
  }
  out.image_span = Subspace<F>::from_vectors(rel.h.dim(), out.images);
  out.injective = out.image_span.dim() == static_cast<int>(fg.generators.size());
  out.image_dim_equals_rank = out.image_span.dim() == fg.contracted_rank;
  return out;
}

}  // namespace qhh
