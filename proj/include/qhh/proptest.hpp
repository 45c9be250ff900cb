#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qhh/cochain.hpp"
#include "qhh/dualext.hpp"
#include "qhh/fundgroup.hpp"
#include "qhh/generator.hpp"
#include "qhh/lie.hpp"
#include "qhh/radzero.hpp"
#include "qhh/relative.hpp"

namespace qhh {

enum class Outcome { pass, skip, fail };

struct CaseReport {
  Outcome outcome = Outcome::pass;
  std::string detail;  // replay text for failures, reason for skips
};

using SuiteFn = std::function<CaseReport(Rng&)>;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int passed = 0;
  int skipped = 0;
  int failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0; }
};

// Each case gets its own stream derived from the base seed, so a failing case
// replays in isolation.
inline SuiteResult run_suite(const std::string& name, const SuiteFn& fn, uint64_t seed,
                             int cases) {
  SuiteResult r;
  r.name = name;
  r.cases = cases;
  for (int i = 0; i < cases; ++i) {
    Rng rng(seed + 0x9e3779b97f4a7c15ull * static_cast<uint64_t>(i + 1));
    CaseReport c = fn(rng);
    if (c.outcome == Outcome::pass) ++r.passed;
    if (c.outcome == Outcome::skip) ++r.skipped;
    if (c.outcome == Outcome::fail) {
      ++r.failed;
      if (r.first_failure.empty()) r.first_failure = c.detail;
    }
  }
  return r;
}

// Greedy shrinking: drop relations, subalgebra arrows, arrows (with their
// relations), and unused vertices while the failure persists.
inline Instance minimize_instance(Instance ins,
                                  const std::function<bool(const Instance&)>& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < ins.relations.size(); ++i) {
      Instance c = ins;
      c.relations.erase(c.relations.begin() + static_cast<long>(i));
      if (fails(c)) {
        ins = std::move(c);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; i < ins.b_names.size(); ++i) {
      Instance c = ins;
      c.b_names.erase(c.b_names.begin() + static_cast<long>(i));
      if (fails(c)) {
        ins = std::move(c);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; i < ins.arrows.size(); ++i) {
      Instance c = ins;
      std::string name = c.arrows[static_cast<size_t>(i)].name;
      c.arrows.erase(c.arrows.begin() + static_cast<long>(i));
      std::vector<std::vector<int>> rels;
      for (const auto& w : c.relations) {
        bool touches = false;
        std::vector<int> mapped;
        for (int ar : w) {
          if (ar == static_cast<int>(i)) touches = true;
          mapped.push_back(ar > static_cast<int>(i) ? ar - 1 : ar);
        }
        if (!touches) rels.push_back(std::move(mapped));
      }
      c.relations = std::move(rels);
      std::vector<std::string> bn;
      for (const std::string& n : c.b_names)
        if (n != name) bn.push_back(n);
      c.b_names = std::move(bn);
      if (fails(c)) {
        ins = std::move(c);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; ins.vertices.size() > 1 && i < ins.vertices.size(); ++i) {
      int v = ins.vertices[i];
      bool used = false;
      for (const Arrow& a : ins.arrows)
        if (a.source == v || a.target == v) used = true;
      if (used) continue;
      Instance c = ins;
      c.vertices.erase(c.vertices.begin() + static_cast<long>(i));
      if (fails(c)) {
        ins = std::move(c);
        changed = true;
        break;
      }
    }
  }
  return ins;
}

// Evaluate one generated instance.  The property returns true on pass and
// false on violation; a ValidationError is a precondition miss (skip), a
// VerificationError is a library self-check tripping (fail).
inline CaseReport judge(const Instance& ins, const std::function<bool(const Instance&)>& holds) {
  auto fails = [&](const Instance& c) {
    try {
      return !holds(c);
    } catch (const VerificationError&) {
      return true;
    } catch (const std::exception&) {
      return false;
    }
  };
  try {
    if (holds(ins)) return {Outcome::pass, ""};
  } catch (const VerificationError&) {
    // counts as a failure, shrink below
  } catch (const ValidationError& e) {
    return {Outcome::skip, e.what()};
  }
  return {Outcome::fail, minimize_instance(ins, fails).text("counterexample")};
}

template <class F>
bool structural_axioms_hold(const Instance& in) {
  SubalgebraPair pair = in.build();
  CochainComplex<F> cx = build_complex<F>(pair.a);
  if (!composes_to_zero(cx)) return false;
  Hh1<F> abs = hh1(cx);

  const auto& kb = abs.ker.basis;
  size_t n = std::min<size_t>(kb.size(), 6);
  auto add = [](std::vector<F> a, const std::vector<F>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  auto all_zero = [](const std::vector<F>& v) {
    for (const F& x : v)
      if (!is_zero(x)) return false;
    return true;
  };

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<F> br = bracket_raw(cx, kb[i], kb[j]);
      if (!abs.ker.contains(br)) return false;
      if (!all_zero(add(br, bracket_raw(cx, kb[j], kb[i])))) return false;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        std::vector<F> s = bracket_raw(cx, bracket_raw(cx, kb[i], kb[j]), kb[k]);
        s = add(std::move(s), bracket_raw(cx, bracket_raw(cx, kb[j], kb[k]), kb[i]));
        s = add(std::move(s), bracket_raw(cx, bracket_raw(cx, kb[k], kb[i]), kb[j]));
        if (!all_zero(s)) return false;
      }

  size_t m = std::min<size_t>(abs.im.basis.size(), 6);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      if (!abs.im.contains(bracket_raw(cx, kb[i], abs.im.basis[j]))) return false;

  RelativeHh1<F> rel = relative_hh1(cx, pair, abs);
  RelativeEmbedding<F> emb = build_embedding(cx, rel, abs);
  return emb.injective && emb.lie_morphism;
}

inline CaseReport axioms_case(Rng& rng) {
  GenOptions o;
  int f = rng.below(3);
  o.field = f == 0 ? FieldSpec::rationals() : FieldSpec::prime(f == 1 ? 2 : 3);
  Instance ins = finite_instance(rng, o);
  return judge(ins, [](const Instance& in) {
    if (in.field.kind == FieldSpec::Kind::rationals) return structural_axioms_hold<Rational>(in);
    return structural_axioms_hold<Fp>(in);
  });
}

inline CaseReport radzero_case(Rng& rng) {
  GenOptions o;
  o.rad_square_zero = true;
  Instance ins = random_instance(rng, o);
  return judge(ins, [](const Instance& in) {
    SubalgebraPair pair = in.build();
    RadZeroDescriptor d = radzero_descriptor(pair);
    CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
    Hh1<Rational> abs = hh1(cx);
    RelativeHh1<Rational> rel = relative_hh1(cx, pair, abs);
    return radzero_generic(cx, pair, rel).matches(d);
  });
}

inline CaseReport dualext_case_opts(Rng& rng, const GenOptions& o) {
  InstancePair ip = random_directed_pair(rng, o);
  try {
    MonomialAlgebra b = ip.b.build_algebra();
    MonomialAlgebra a = ip.a.build_algebra();
    DualExtResult r = analyze_dual_extension<Rational>(b, a);
    bool ok = r.i_in_j && r.exact_sequence && r.degree_one_additive && r.j_is_ideal &&
              r.kernel_splits && r.b_kernel_embeds && r.split_brackets_vanish;
    if (ok) return {Outcome::pass, ""};
  } catch (const VerificationError& e) {
    return {Outcome::fail,
            std::string("# ") + e.what() + "\n" + ip.b.text("b_input") + ip.a.text("a_input")};
  } catch (const ValidationError& e) {
    return {Outcome::skip, e.what()};
  }
  return {Outcome::fail, ip.b.text("b_input") + ip.a.text("a_input")};
}

inline CaseReport dualext_case(Rng& rng) {
  return dualext_case_opts(rng, GenOptions{});
}

inline CaseReport fundgroup_case(Rng& rng) {
  GenOptions o;
  Instance ins = finite_instance(rng, o);
  return judge(ins, [](const Instance& in) {
    SubalgebraPair pair = in.build();
    CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
    Hh1<Rational> abs = hh1(cx);
    RelativeHh1<Rational> rel = relative_hh1(cx, pair, abs);
    RelativeEmbedding<Rational> emb = build_embedding(cx, rel, abs);
    FundGroup fg = build_fundgroup(pair);
    FundGroup fga = build_fundgroup(pair, true);
    if (fg.contracted_rank != fga.contracted_rank) return false;
    ThetaResult<Rational> th = theta_map(cx, pair, fg, rel, abs, emb);
    ThetaResult<Rational> tha = theta_map(cx, pair, fga, rel, abs, emb);
    for (const ThetaResult<Rational>* t : {&th, &tha})
      if (!t->injective || !t->commutes || !t->image_dim_equals_rank) return false;
    if (!th.image_span.contains(tha.image_span) || !tha.image_span.contains(th.image_span))
      return false;
    const Quiver& q = pair.a.quiver();
    for (size_t k = 0; k < fg.generators.size(); ++k) {
      int g = fg.generators[k];
      auto walk = generator_walk(pair, fg, g, default_basepoint_id(q, fg, g));
      std::vector<int> word = walk_word(pair, fg, walk);
      if (word.size() != 1 || word[0] != static_cast<int>(k) + 1) return false;
    }
    return true;
  });
}

inline CaseReport solvable_case(Rng& rng) {
  GenOptions o;
  o.simple_complement = true;
  Instance ins = finite_instance(rng, o);
  return judge(ins, [](const Instance& in) {
    SubalgebraPair pair = in.build();
    CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
    Hh1<Rational> abs = hh1(cx);
    RelativeHh1<Rational> rel = relative_hh1(cx, pair, abs);
    LieAlgebra<Rational> L = lie_from_subquotient(cx, rel.h);
    return analyze(L).solvable;
  });
}

inline CaseReport strongsolv_case_field(Rng& rng, long long p) {
  GenOptions o;
  o.loopless = true;
  o.simple_complement = true;
  o.field = FieldSpec::prime(p);
  Instance ins = finite_instance(rng, o);
  return judge(ins, [](const Instance& in) {
    SubalgebraPair pair = in.build();
    CochainComplex<Fp> cx = build_complex<Fp>(pair.a);
    Hh1<Fp> abs = hh1(cx);
    RelativeHh1<Fp> rel = relative_hh1(cx, pair, abs);
    LieAlgebra<Fp> L = lie_from_subquotient(cx, rel.h);
    return analyze(L).strongly_solvable;
  });
}

inline CaseReport strongsolv_case(Rng& rng) {
  return strongsolv_case_field(rng, rng.chance(1, 2) ? 2 : 3);
}

inline const std::vector<std::pair<std::string, SuiteFn>>& proptest_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"axioms", axioms_case},       {"radzero", radzero_case},
      {"dualext", dualext_case},     {"fundgroup", fundgroup_case},
      {"solvable", solvable_case},   {"strongsolv", strongsolv_case},
  };
  return s;
}

}  // namespace qhh
