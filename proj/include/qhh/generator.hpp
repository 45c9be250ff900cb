#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/errors.hpp"

namespace qhh {

// Deterministic random stream for property tests: fixed engine and fixed
// reduction so a seed replays the same instances everywhere.  The modulo
// reduction is slightly biased, which is irrelevant here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  int below(int n) {
    return n <= 1 ? 0 : static_cast<int>(raw() % static_cast<uint64_t>(n));
  }

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

// A generated test case as plain data.  It serializes to the input grammar so
// any failure replays from a file, and builds into the algebra pair on demand.
struct Instance {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> relations;  // arrow-index words, application order
  std::vector<std::string> b_names;
  FieldSpec field = FieldSpec::rationals();

  std::string text(const std::string& name = "random") const {
    std::ostringstream os;
    os << "algebra " << name << "\n";
    os << "vertices:";
    for (int v : vertices) os << " " << v;
    os << "\n";
    if (arrows.empty()) {
      os << "arrows: (none)\n";
    } else {
      os << "arrows: ";
      for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) os << "; ";
        os << arrows[i].name << ": " << arrows[i].source << " -> " << arrows[i].target;
      }
      os << "\n";
    }
    if (relations.empty()) {
      os << "relations: (none)\n";
    } else {
      os << "relations: ";
      for (size_t i = 0; i < relations.size(); ++i) {
        if (i) os << ", ";
        for (size_t k = 0; k < relations[i].size(); ++k) {
          if (k) os << "*";
          os << arrows[static_cast<size_t>(relations[i][k])].name;
        }
      }
      os << "\n";
    }
    os << "subalgebra sub\n";
    if (b_names.empty()) {
      os << "arrows: (none)\n";
    } else {
      os << "arrows: ";
      for (size_t i = 0; i < b_names.size(); ++i) {
        if (i) os << ", ";
        os << b_names[i];
      }
      os << "\n";
    }
    return os.str();
  }

  MonomialAlgebra build_algebra() const {
    Quiver q(vertices, arrows);
    std::vector<Path> rels;
    for (const auto& w : relations) rels.push_back(make_path(q, w));
    return MonomialAlgebra(std::move(q), std::move(rels), field);
  }

  SubalgebraPair build() const { return SubalgebraPair::make(build_algebra(), b_names); }
};

struct GenOptions {
  int max_vertices = 4;
  int max_arrows = 5;
  bool loopless = false;           // no arrow from a vertex to itself
  bool directed = false;           // arrows strictly ascend vertex ids
  bool simple_complement = false;  // at most one non-subalgebra arrow per parallel class
  bool rad_square_zero = false;    // relations are exactly the composable length-two paths
  FieldSpec field = FieldSpec::rationals();
};

namespace detail {

inline std::vector<std::vector<int>> composable_words(const std::vector<Arrow>& arrows, int len) {
  std::vector<std::vector<int>> words;
  std::vector<int> word;
  auto rec = [&](auto&& self, int at) -> void {
    if (static_cast<int>(word.size()) == len) {
      words.push_back(word);
      return;
    }
    for (size_t i = 0; i < arrows.size(); ++i) {
      if (!word.empty() && at != arrows[i].source) continue;
      word.push_back(static_cast<int>(i));
      self(self, arrows[i].target);
      word.pop_back();
    }
  };
  rec(rec, 0);
  return words;
}

}  // namespace detail

inline Instance random_instance_on(Rng& rng, const GenOptions& o, int nv) {
  Instance ins;
  ins.field = o.field;
  for (int v = 1; v <= nv; ++v) ins.vertices.push_back(v);

  int na = rng.below(o.max_arrows + 1);
  if (o.directed && nv < 2) na = 0;
  for (int i = 0; i < na; ++i) {
    int s = 0, t = 0;
    if (o.directed) {
      s = rng.below(nv - 1);
      t = s + 1 + rng.below(nv - 1 - s);
    } else if (o.loopless) {
      if (nv < 2) break;
      s = rng.below(nv);
      t = rng.below(nv - 1);
      if (t >= s) ++t;
    } else {
      s = rng.below(nv);
      t = rng.below(nv);
    }
    ins.arrows.push_back({"a" + std::to_string(i + 1), s + 1, t + 1});
  }

  if (o.rad_square_zero) {
    ins.relations = detail::composable_words(ins.arrows, 2);
  } else {
    for (int len = 2; len <= 3; ++len)
      for (auto& w : detail::composable_words(ins.arrows, len))
        if (rng.chance(1, 3)) ins.relations.push_back(std::move(w));
  }

  if (o.simple_complement) {
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (size_t i = 0; i < ins.arrows.size(); ++i)
      classes[{ins.arrows[i].source, ins.arrows[i].target}].push_back(static_cast<int>(i));
    std::vector<bool> in_b(ins.arrows.size(), true);
    for (auto& [ends, members] : classes) {
      if (!rng.chance(1, 2)) continue;
      int pick = members[static_cast<size_t>(rng.below(static_cast<int>(members.size())))];
      in_b[static_cast<size_t>(pick)] = false;
    }
    for (size_t i = 0; i < ins.arrows.size(); ++i)
      if (in_b[i]) ins.b_names.push_back(ins.arrows[i].name);
  } else {
    for (const Arrow& a : ins.arrows)
      if (rng.chance(1, 2)) ins.b_names.push_back(a.name);
  }
  return ins;
}

inline Instance random_instance(Rng& rng, const GenOptions& o) {
  return random_instance_on(rng, o, 1 + rng.below(o.max_vertices));
}

// Like random_instance but guaranteed to build: when the sampled relations
// leave a cycle unobstructed, the relation set falls back to every composable
// length-two path, which always cuts the basis down to vertices and arrows.
inline Instance finite_instance(Rng& rng, const GenOptions& o) {
  Instance ins = random_instance(rng, o);
  try {
    ins.build();
    return ins;
  } catch (const NotFiniteDimensional&) {
    ins.relations = detail::composable_words(ins.arrows, 2);
    return ins;
  }
}

// Two directed algebras on one vertex set, inputs for a dual extension.
// Arrow names are disjoint by construction (b* vs a*).
struct InstancePair {
  Instance b;
  Instance a;
};

inline InstancePair random_directed_pair(Rng& rng, const GenOptions& o) {
  GenOptions od = o;
  od.directed = true;
  int nv = 1 + rng.below(od.max_vertices);
  InstancePair p;
  p.b = random_instance_on(rng, od, nv);
  p.a = random_instance_on(rng, od, nv);
  // The exact-sequence comparison of a dual extension needs the underlying
  // graph of Q_B to have as many connected components as the combined quiver;
  // keeping Q_B connected guarantees that. Join each vertex to a lower one
  // unless the random arrows already did.
  {
    std::vector<int> root(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) root[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
      while (root[static_cast<size_t>(v)] != v) v = root[static_cast<size_t>(v)];
      return v;
    };
    for (const Arrow& ar : p.b.arrows) root[static_cast<size_t>(find(ar.source - 1))] = find(ar.target - 1);
    for (int j = 2; j <= nv; ++j) {
      if (find(j - 1) == find(0)) continue;
      int u = 1 + rng.below(j - 1);
      p.b.arrows.push_back({"t" + std::to_string(j), u, j});
      root[static_cast<size_t>(find(j - 1))] = find(u - 1);
    }
  }
  for (size_t i = 0; i < p.b.arrows.size(); ++i) p.b.arrows[i].name = "b" + std::to_string(i + 1);
  for (size_t i = 0; i < p.a.arrows.size(); ++i) p.a.arrows[i].name = "c" + std::to_string(i + 1);
  p.b.b_names.clear();
  p.a.b_names.clear();
  return p;
}

}  // namespace qhh
