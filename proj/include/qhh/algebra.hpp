#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qhh/field.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

// Removes duplicates and any relation that properly contains another relation
// as a subpath (the ideal is unchanged); appends a note per removal.
inline std::vector<Path> normalize_relations(const Quiver& q, std::vector<Path> rels,
                                             std::vector<std::string>* warnings) {
  std::sort(rels.begin(), rels.end(), path_less);
  std::vector<Path> kept;
  auto contains_proper = [](const std::vector<int>& big, const std::vector<int>& small) {
    if (small.size() >= big.size()) return false;
    for (size_t i = 0; i + small.size() <= big.size(); ++i)
      if (std::equal(small.begin(), small.end(), big.begin() + i)) return true;
    return false;
  };
  for (size_t i = 0; i < rels.size(); ++i) {
    if (i > 0 && rels[i] == rels[i - 1]) {
      if (warnings) warnings->push_back("dropped duplicate relation " + path_str(q, rels[i]));
      continue;
    }
    bool redundant = false;
    for (const Path& r : rels) {
      if (contains_proper(rels[i].arrows, r.arrows)) {
        if (warnings)
          warnings->push_back("dropped relation " + path_str(q, rels[i]) +
                              " containing relation " + path_str(q, r));
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(rels[i]);
  }
  return kept;
}

// Finite-dimensional monomial path algebra kQ/<Z>.  Z is a minimal set of
// paths of length >= 2; the basis is the set of paths avoiding every element
// of Z as a subpath, enumerated in canonical (length, then lex) order.
// Construction fails with NotFiniteDimensional when relation-avoiding paths
// of unbounded length exist, which is decided exactly: extending a path only
// looks at its trailing window of maxlen-1 arrows, so the algebra is
// infinite-dimensional iff the graph on those windows has a reachable cycle.
class MonomialAlgebra {
 public:
  MonomialAlgebra(Quiver quiver, std::vector<Path> relations,
                  FieldSpec field = FieldSpec::rationals())
      : quiver_(std::move(quiver)), field_(field) {
    relations_ = normalize_relations(quiver_, std::move(relations), &warnings_);
    for (const Path& r : relations_) {
      if (r.length() < 2)
        throw ValidationError("relation " + path_str(quiver_, r) + " has length < 2");
      make_path(quiver_, r.arrows);  // validates composability
    }
    enumerate_basis();
  }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  std::optional<int> basis_index(const Path& p) const {
    auto it = basis_index_.find({p.source, p.arrows});
    if (it == basis_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> basis_index(int source, const std::vector<int>& arrows) const {
    auto it = basis_index_.find({source, arrows});
    if (it == basis_index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains_relation(const std::vector<int>& arrows) const {
    for (const Path& r : relations_) {
      if (r.arrows.size() > arrows.size()) continue;
      for (size_t i = 0; i + r.arrows.size() <= arrows.size(); ++i)
        if (std::equal(r.arrows.begin(), r.arrows.end(), arrows.begin() + i)) return true;
    }
    return false;
  }

  // Product of basis elements b_i * b_j (right-to-left: b_j acts first).
  // Returns the basis index of the concatenation, or nullopt when the product
  // is zero (non-composable, or the concatenation meets a relation).
  std::optional<int> multiply(int i, int j) const {
    const Path& second = basis_[i];
    const Path& first = basis_[j];
    if (first.target != second.source) return std::nullopt;
    std::vector<int> arrows = first.arrows;
    arrows.insert(arrows.end(), second.arrows.begin(), second.arrows.end());
    return basis_index(first.source, arrows);
  }

  int max_relation_length() const {
    int m = 0;
    for (const Path& r : relations_) m = std::max(m, r.length());
    return m;
  }

  // Basis indices grouped by (source, target), each group in basis order.
  const std::vector<int>& parallel_basis(int source, int target) const {
    static const std::vector<int> empty;
    auto it = parallel_basis_.find({source, target});
    return it == parallel_basis_.end() ? empty : it->second;
  }

 private:
  // True when appending arrow a to a path with the given arrow sequence
  // completes some relation as a suffix.
  bool extension_blocked(const std::vector<int>& arrows, int a) const {
    for (const Path& r : relations_) {
      size_t len = r.arrows.size();
      if (len > arrows.size() + 1) continue;
      if (r.arrows.back() != a) continue;
      if (std::equal(r.arrows.begin(), r.arrows.end() - 1, arrows.end() - (len - 1)))
        return true;
    }
    return false;
  }

  void enumerate_basis() {
    const int window = std::max(1, max_relation_length() - 1);
    std::vector<std::vector<int>> out_arrows(quiver_.vertex_count());
    for (int i = 0; i < quiver_.arrow_count(); ++i)
      out_arrows[quiver_.vertex_index(quiver_.arrow(i).source)].push_back(i);

    std::vector<Path> frontier;
    for (int v : quiver_.vertices()) frontier.push_back(trivial_path(v));
    basis_.clear();

    // window states discovered so far, with their outgoing transitions
    std::map<std::vector<int>, int> state_id;
    std::vector<std::vector<int>> state_next;
    bool cycle_checked = false;

    while (!frontier.empty()) {
      for (const Path& p : frontier) basis_.push_back(p);
      std::vector<Path> next;
      for (const Path& p : frontier) {
        for (int a : out_arrows[quiver_.vertex_index(p.target)]) {
          if (extension_blocked(p.arrows, a)) continue;
          Path q = p;
          q.arrows.push_back(a);
          q.target = quiver_.arrow(a).target;
          next.push_back(std::move(q));
        }
      }
      // Once paths reach the window length, decide finiteness via the window
      // graph before growing further.
      if (!cycle_checked && !next.empty() && next.front().length() > window) {
        for (const Path& p : basis_)
          if (p.length() == window) state_id.emplace(p.arrows, static_cast<int>(state_id.size()));
        state_next.assign(state_id.size(), {});
        for (const auto& [arrows, id] : state_id) {
          int tail = quiver_.arrow(arrows.back()).target;
          for (int a : out_arrows[quiver_.vertex_index(tail)]) {
            if (extension_blocked(arrows, a)) continue;
            std::vector<int> shifted(arrows.begin() + 1, arrows.end());
            shifted.push_back(a);
            auto it = state_id.find(shifted);
            if (it != state_id.end()) state_next[id].push_back(it->second);
          }
        }
        if (has_cycle(state_next))
          throw NotFiniteDimensional(
              "relation-avoiding paths of unbounded length exist (cycle in the trailing-window "
              "graph)");
        cycle_checked = true;
      }
      frontier = std::move(next);
    }

    std::sort(basis_.begin(), basis_.end(), path_less);
    for (size_t i = 0; i < basis_.size(); ++i)
      basis_index_[{basis_[i].source, basis_[i].arrows}] = static_cast<int>(i);
    for (size_t i = 0; i < basis_.size(); ++i)
      parallel_basis_[{basis_[i].source, basis_[i].target}].push_back(static_cast<int>(i));
  }

  static bool has_cycle(const std::vector<std::vector<int>>& adj) {
    enum { White, Grey, Black };
    std::vector<int> color(adj.size(), White);
    std::vector<std::pair<int, size_t>> stack;
    for (size_t s = 0; s < adj.size(); ++s) {
      if (color[s] != White) continue;
      stack.push_back({static_cast<int>(s), 0});
      color[s] = Grey;
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i == adj[v].size()) {
          color[v] = Black;
          stack.pop_back();
          continue;
        }
        int w = adj[v][i++];
        if (color[w] == Grey) return true;
        if (color[w] == White) {
          color[w] = Grey;
          stack.push_back({w, 0});
        }
      }
    }
    return false;
  }

  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<Path> basis_;
  std::map<std::pair<int, std::vector<int>>, int> basis_index_;
  std::map<std::pair<int, int>, std::vector<int>> parallel_basis_;
  FieldSpec field_;
  std::vector<std::string> warnings_;
};

inline MonomialAlgebra opposite_algebra(const MonomialAlgebra& a) {
  Quiver op = opposite_quiver(a.quiver());
  std::vector<Path> rels;
  for (const Path& r : a.relations()) {
    std::vector<int> rev(r.arrows.rbegin(), r.arrows.rend());
    rels.push_back(make_path(op, rev));
  }
  return MonomialAlgebra(std::move(op), std::move(rels), a.field());
}

// A monomial algebra A together with an arrow-spanned subalgebra B: same
// vertices, a subset of the arrows, and exactly those relations of A whose
// support lies in B.  With inherited relations every basis path of B is a
// basis path of A, so B really is a subalgebra.
struct SubalgebraPair {
  MonomialAlgebra a;
  MonomialAlgebra b;
  std::vector<int> b_arrows;        // indices into a's arrows, increasing
  std::vector<bool> in_b;           // per arrow of a
  std::vector<int> b_arrow_index;   // arrow index in b's quiver, or -1

  static SubalgebraPair make(MonomialAlgebra algebra, const std::vector<std::string>& arrow_names) {
    const Quiver& q = algebra.quiver();
    std::vector<bool> in_b(q.arrow_count(), false);
    for (const std::string& n : arrow_names) {
      auto idx = q.arrow_index(n);
      if (!idx) throw ValidationError("subalgebra arrow '" + n + "' is not an arrow of the algebra");
      if (in_b[*idx]) throw ValidationError("subalgebra arrow '" + n + "' listed twice");
      in_b[*idx] = true;
    }
    std::vector<int> b_arrows;
    for (int i = 0; i < q.arrow_count(); ++i)
      if (in_b[i]) b_arrows.push_back(i);

    Quiver bq = arrow_subquiver(q, b_arrows);
    std::vector<int> b_arrow_index(q.arrow_count(), -1);
    for (size_t i = 0; i < b_arrows.size(); ++i) b_arrow_index[b_arrows[i]] = static_cast<int>(i);

    std::vector<Path> b_rels;
    for (const Path& r : algebra.relations()) {
      bool supported = true;
      for (int ar : r.arrows)
        if (!in_b[ar]) {
          supported = false;
          break;
        }
      if (!supported) continue;
      std::vector<int> mapped;
      for (int ar : r.arrows) mapped.push_back(b_arrow_index[ar]);
      b_rels.push_back(make_path(bq, mapped));
    }
    MonomialAlgebra b(std::move(bq), std::move(b_rels), algebra.field());

    // Inherited relations make this automatic; keep it checked anyway.
    for (const Path& p : b.basis()) {
      std::vector<int> in_a;
      for (int ar : p.arrows) in_a.push_back(b_arrows[ar]);
      if (!algebra.basis_index(p.source, in_a))
        throw ValidationError("subalgebra basis path " + path_str(b.quiver(), p) +
                              " vanishes in the ambient algebra");
    }

    SubalgebraPair pair{std::move(algebra), std::move(b), std::move(b_arrows), std::move(in_b),
                        std::move(b_arrow_index)};
    return pair;
  }

  // B with no arrows: the vertex-span subalgebra, giving absolute invariants.
  static SubalgebraPair trivial(MonomialAlgebra algebra) {
    return make(std::move(algebra), {});
  }

  std::vector<int> complement() const { return complement_arrows(a.quiver(), in_b); }
  Quiver complement_quiver() const { return arrow_subquiver(a.quiver(), complement()); }
};

}  // namespace qhh
