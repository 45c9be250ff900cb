#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/errors.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

// The three strata of parallel pairs x//p underlying the cochain spaces:
// vertices//basis, arrows//basis, relations//basis.  A pair couples a left
// object x (vertex, arrow, or relation) with a basis path p parallel to it.
enum class Stratum { vertices, arrows, relations };

// Ordered list of the pairs of one stratum.  Pairs are sorted by left index,
// then by basis index; since the algebra basis is sorted by length then
// lexicographic order this fixes one canonical coordinate system per algebra.
class PairBasis {
 public:
  struct Entry {
    int left;    // vertex, arrow, or relation index depending on stratum
    int basis;   // index into algebra.basis()
    int degree;  // len(p) - len(x) + 1
  };

  PairBasis() = default;

  PairBasis(const MonomialAlgebra& alg, Stratum stratum)
      : alg_(&alg), stratum_(stratum) {
    const Quiver& q = alg.quiver();
    auto add_for = [&](int left, int source, int target, int left_len) {
      for (int b : alg.parallel_basis(source, target)) {
        int deg = alg.basis()[static_cast<size_t>(b)].length() - left_len + 1;
        entries_.push_back({left, b, deg});
      }
    };
    switch (stratum) {
      case Stratum::vertices:
        for (size_t v = 0; v < q.vertices().size(); ++v) {
          int id = q.vertices()[v];
          add_for(static_cast<int>(v), id, id, 0);
        }
        break;
      case Stratum::arrows:
        for (size_t a = 0; a < q.arrows().size(); ++a)
          add_for(static_cast<int>(a), q.arrows()[a].source, q.arrows()[a].target, 1);
        break;
      case Stratum::relations:
        for (size_t r = 0; r < alg.relations().size(); ++r) {
          const Path& rel = alg.relations()[r];
          add_for(static_cast<int>(r), rel.source, rel.target, rel.length());
        }
        break;
    }
    for (size_t k = 0; k < entries_.size(); ++k)
      index_[{entries_[k].left, entries_[k].basis}] = static_cast<int>(k);
  }

  int dim() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(int k) const { return entries_[static_cast<size_t>(k)]; }
  int degree(int k) const { return entries_[static_cast<size_t>(k)].degree; }
  Stratum stratum() const { return stratum_; }
  const MonomialAlgebra& algebra() const { return *alg_; }

  std::optional<int> index(int left, int basis) const {
    auto it = index_.find({left, basis});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string left_str(int k) const {
    const Entry& e = entries_[static_cast<size_t>(k)];
    const Quiver& q = alg_->quiver();
    switch (stratum_) {
      case Stratum::vertices:
        return "e" + std::to_string(q.vertices()[static_cast<size_t>(e.left)]);
      case Stratum::arrows:
        return q.arrows()[static_cast<size_t>(e.left)].name;
      case Stratum::relations:
        return path_str(q, alg_->relations()[static_cast<size_t>(e.left)]);
    }
    return {};
  }

  std::string label(int k) const {
    const Entry& e = entries_[static_cast<size_t>(k)];
    return left_str(k) + "//" +
           path_str(alg_->quiver(), alg_->basis()[static_cast<size_t>(e.basis)]);
  }

 private:
  const MonomialAlgebra* alg_ = nullptr;
  Stratum stratum_ = Stratum::arrows;
  std::vector<Entry> entries_;
  std::map<std::pair<int, int>, int> index_;
};

// Substitutes gamma for one occurrence of the arrow at a time inside word,
// keeping only results that survive in the basis.  Returns basis index ->
// integer multiplicity; the caller scales into the working field, so repeated
// occurrences cancel correctly in positive characteristic.
inline std::map<int, long long> substitute(const MonomialAlgebra& alg,
                                           const Path& word, int arrow,
                                           const Path& gamma) {
  std::map<int, long long> out;
  for (size_t pos = 0; pos < word.arrows.size(); ++pos) {
    if (word.arrows[pos] != arrow) continue;
    std::vector<int> replaced;
    replaced.reserve(word.arrows.size() - 1 + gamma.arrows.size());
    replaced.insert(replaced.end(), word.arrows.begin(),
                    word.arrows.begin() + static_cast<long>(pos));
    replaced.insert(replaced.end(), gamma.arrows.begin(), gamma.arrows.end());
    replaced.insert(replaced.end(),
                    word.arrows.begin() + static_cast<long>(pos) + 1,
                    word.arrows.end());
    if (auto b = alg.basis_index(word.source, replaced)) out[*b] += 1;
  }
  return out;
}

}  // namespace qhh
