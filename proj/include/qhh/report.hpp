#pragma once

#include <json.hpp>
#include <cstdlib>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/cochain.hpp"
#include "qhh/dualext.hpp"
#include "qhh/fundgroup.hpp"
#include "qhh/lie.hpp"
#include "qhh/radzero.hpp"
#include "qhh/relative.hpp"

namespace qhh {

using Json = nlohmann::ordered_json;

inline Json path_json(const Quiver& q, const Path& p) {
  Json j;
  j["source"] = p.source;
  j["target"] = p.target;
  Json arrows = Json::array();
  for (int a : p.arrows) arrows.push_back(q.arrow(a).name);
  j["arrows"] = std::move(arrows);
  return j;
}

// A vector in pair-1 coordinates as a list of {pair, coeff} terms, exact
// scalars rendered as strings.
template <class F>
Json pair_vector_json(const PairBasis& pb, const std::vector<F>& v) {
  Json terms = Json::array();
  for (int k = 0; k < pb.dim(); ++k) {
    if (is_zero(v[static_cast<size_t>(k)])) continue;
    Json t;
    t["pair"] = pb.label(k);
    t["coeff"] = to_string(v[static_cast<size_t>(k)]);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Json graded_json(const std::map<int, int>& g) {
  Json j = Json::object();
  for (const auto& [deg, dim] : g) j[std::to_string(deg)] = dim;
  return j;
}

inline Json lie_summary_json(const LieSummary& s) {
  Json j;
  j["dim"] = s.dim;
  j["derived_dims"] = s.derived_dims;
  j["lcs_dims"] = s.lcs_dims;
  j["solvable"] = s.solvable;
  j["nilpotent"] = s.nilpotent;
  j["abelian"] = s.abelian;
  j["strongly_solvable"] = s.strongly_solvable;
  j["radical_dim"] = s.radical_dim ? Json(*s.radical_dim) : Json(nullptr);
  j["semisimple_dim"] = s.semisimple_dim ? Json(*s.semisimple_dim) : Json(nullptr);
  return j;
}

inline Json basis_report(const SubalgebraPair& pair, const std::string& name) {
  const MonomialAlgebra& a = pair.a;
  Json j;
  j["algebra"] = name;
  j["field"] = a.field().str();
  j["vertices"] = a.quiver().vertices();
  Json arrows = Json::array();
  for (const Arrow& ar : a.quiver().arrows()) {
    Json x;
    x["name"] = ar.name;
    x["source"] = ar.source;
    x["target"] = ar.target;
    arrows.push_back(std::move(x));
  }
  j["arrows"] = std::move(arrows);
  Json rels = Json::array();
  for (const Path& r : a.relations()) rels.push_back(path_json(a.quiver(), r));
  j["relations"] = std::move(rels);
  j["dim"] = a.dim();
  Json basis = Json::array();
  for (const Path& p : a.basis()) basis.push_back(path_json(a.quiver(), p));
  j["basis"] = std::move(basis);
  Json barrows = Json::array();
  for (int i : pair.b_arrows) barrows.push_back(a.quiver().arrow(i).name);
  j["subalgebra_arrows"] = std::move(barrows);
  j["subalgebra_dim"] = pair.b.dim();
  j["warnings"] = a.warnings();
  return j;
}

template <class F>
Json hh1_report(const CochainComplex<F>& cx, const Hh1<F>& h) {
  Json j;
  j["field"] = cx.algebra().field().str();
  j["dim_k_q0_basis"] = cx.p0.dim();
  j["dim_k_q1_basis"] = cx.p1.dim();
  j["dim_k_q2_basis"] = cx.p2.dim();
  j["dim_hh0"] = hh0(cx).dim();
  j["rank_d0"] = h.im.dim();
  j["dim_ker_d1"] = h.ker.dim();
  j["dim_hh1"] = h.h.dim();
  j["graded_dims"] = graded_json(h.graded);
  Json reps = Json::array();
  for (const auto& t : h.h.transversal) reps.push_back(pair_vector_json(cx.p1, t));
  j["transversal"] = std::move(reps);
  return j;
}

template <class F>
Json hh1rel_report(const CochainComplex<F>& cx, const Hh1<F>& abs, const RelativeHh1<F>& rel,
                   const RelativeEmbedding<F>& emb) {
  Json j;
  j["field"] = cx.algebra().field().str();
  j["dim_ker_d1_rel"] = rel.ker.dim();
  j["rank_d0_rel"] = rel.im.dim();
  j["dim_rel"] = rel.h.dim();
  j["dim_abs"] = abs.h.dim();
  j["embedding_rank"] = emb.injective ? rel.h.dim() : rank(emb.matrix);
  j["embedding_injective"] = emb.injective;
  j["embedding_lie_morphism"] = emb.lie_morphism;
  j["graded_dims"] = graded_json(rel.graded);
  Json reps = Json::array();
  for (const auto& t : rel.h.transversal) reps.push_back(pair_vector_json(cx.p1, t));
  j["transversal"] = std::move(reps);
  LieAlgebra<F> L = lie_from_subquotient(cx, rel.h);
  j["lie"] = lie_summary_json(analyze(L));
  return j;
}

template <class F>
Json lie_report(const CochainComplex<F>& cx, const Hh1<F>& abs) {
  LieAlgebra<F> L = lie_from_subquotient(cx, abs.h);
  Json j = lie_summary_json(analyze(L));
  j["labels"] = L.labels;
  return j;
}

inline Json radzero_descriptor_json(const RadZeroDescriptor& d, const Quiver& q) {
  Json j;
  Json classes = Json::array();
  for (const RadZeroClass& c : d.classes) {
    Json x;
    x["source"] = c.source;
    x["target"] = c.target;
    Json members = Json::array();
    for (int m : c.members) members.push_back(q.arrow(m).name);
    x["arrows"] = std::move(members);
    x["ambient"] = c.ambient;
    x["in_subalgebra"] = c.in_b;
    x["complement"] = c.complement;
    classes.push_back(std::move(x));
  }
  j["classes"] = std::move(classes);
  j["dim_ker_rel"] = d.ker_dim;
  j["rank_d0_rel"] = d.image_rank;
  j["dim_hh1_rel"] = d.hh1_dim;
  j["semisimple_dim"] = d.semisimple_dim;
  j["radical_dim"] = d.radical_dim;
  j["abelian_tail"] = d.abelian_tail;
  j["solvable"] = d.solvable;
  return j;
}

template <class F>
Json radzero_report(const SubalgebraPair& pair, const CochainComplex<F>& cx,
                    const RelativeHh1<F>& rel) {
  RadZeroDescriptor d = radzero_descriptor(pair);
  RadZeroCrossCheck<F> c = radzero_generic(cx, pair, rel);
  Json j;
  j["field"] = pair.a.field().str();
  j["descriptor"] = radzero_descriptor_json(d, pair.a.quiver());
  Json cc;
  cc["dim_ker_rel"] = c.ker_dim;
  cc["rank_d0_rel"] = c.image_rank;
  cc["dim_hh1_rel"] = c.hh1_dim;
  cc["semisimple_dim"] = c.semisimple_dim;
  cc["radical_dim"] = c.radical_dim;
  cc["solvable"] = c.solvable;
  cc["kernel_is_pair_span"] = c.kernel_is_pair_span;
  cc["matches"] = c.matches(d);
  j["crosscheck"] = std::move(cc);
  return j;
}

inline Json dualext_report(const DualExtResult& r) {
  Json j;
  j["dim_lambda"] = r.dim_lambda;
  j["dim_hh0_lambda"] = r.dim_hh0_lambda;
  j["dim_j_prime"] = r.dim_j_prime;
  j["dim_ker_rel_b"] = r.dim_ker_rel_b;
  j["dim_j"] = r.dim_j;
  j["dim_i"] = r.dim_i;
  j["dim_j_mod_i"] = r.dim_j_mod_i;
  j["dim_hh1_lambda"] = r.dim_hh1_lambda;
  j["dim_hh1_lambda_rel_b"] = r.dim_hh1_lambda_rel_b;
  j["dim_hh1_b"] = r.dim_hh1_b;
  j["graded_hh1_lambda"] = graded_json(r.graded_hh1_lambda);
  j["graded_j_mod_i"] = graded_json(r.graded_j_mod_i);
  j["graded_hh1_b"] = graded_json(r.graded_hh1_b);
  j["i_in_j"] = r.i_in_j;
  j["exact_sequence"] = r.exact_sequence;
  j["degree_one_additive"] = r.degree_one_additive;
  j["j_is_ideal"] = r.j_is_ideal;
  j["kernel_splits"] = r.kernel_splits;
  j["b_kernel_embeds"] = r.b_kernel_embeds;
  j["split_brackets_vanish"] = r.split_brackets_vanish;
  j["hh1_lambda_lie"] = lie_summary_json(r.hh1_lambda_lie);
  return j;
}

template <class F>
Json pi1_report(const SubalgebraPair& pair, const FundGroup& fg, const ThetaResult<F>& th) {
  const Quiver& q = pair.a.quiver();
  Json j;
  j["betti_a"] = fg.betti_a;
  j["betti_b"] = fg.betti_b;
  j["contracted_rank"] = fg.contracted_rank;
  Json tree = Json::array();
  for (int t : fg.tree) tree.push_back(q.arrow(t).name);
  j["tree"] = std::move(tree);
  Json gens = Json::array();
  for (int g : fg.generators) gens.push_back(q.arrow(g).name);
  j["generators"] = std::move(gens);
  j["theta_image_dim"] = th.image_span.dim();
  Json checks;
  checks["injective"] = th.injective;
  checks["commutes"] = th.commutes;
  checks["image_dim_equals_rank"] = th.image_dim_equals_rank;
  j["pullback_checks"] = std::move(checks);
  return j;
}

template <class F>
Json theta_report(const SubalgebraPair& pair, const FundGroup& fg, const ThetaResult<F>& th,
                  int gen_arrow, int basepoint_id) {
  const Quiver& q = pair.a.quiver();
  Json j;
  j["generator"] = q.arrow(gen_arrow).name;
  j["basepoint"] = basepoint_id;
  std::vector<WalkStep> walk = generator_walk(pair, fg, gen_arrow, basepoint_id);
  Json steps = Json::array();
  for (const WalkStep& s : walk)
    steps.push_back(s.dir > 0 ? q.arrow(s.arrow).name : q.arrow(s.arrow).name + "^-1");
  j["walk"] = std::move(steps);
  Json word = Json::array();
  for (int letter : walk_word(pair, fg, walk)) {
    int g = fg.generators[static_cast<size_t>(std::abs(letter) - 1)];
    word.push_back(letter > 0 ? q.arrow(g).name : q.arrow(g).name + "^-1");
  }
  j["word"] = std::move(word);
  j["image_pair"] = q.arrow(gen_arrow).name + "//" + q.arrow(gen_arrow).name;
  size_t pos = 0;
  while (pos < fg.generators.size() && fg.generators[pos] != gen_arrow) ++pos;
  Json coords = Json::array();
  for (const F& c : th.images[pos]) coords.push_back(to_string(c));
  j["image_rel_coordinates"] = std::move(coords);
  return j;
}

}  // namespace qhh
