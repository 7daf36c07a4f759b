#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "proofcomp/formula.hpp"
#include "proofcomp/names.hpp"

namespace pc {

// Multi-sorted first-order fragment: equality, relations, no function symbols.

struct FOSignature {
  std::vector<std::string> sorts;
  // relation name -> argument sorts
  std::map<std::string, std::vector<std::string>> relations;
};

struct FOTerm {
  bool is_var = false;
  std::string var;   // variable name
  int element = 0;   // 1-based domain element, constants only
  std::string sort;  // filled in during sort checking
};

enum class FOKind { True, False, Eq, Rel, And, Or, Imp, Not, Forall, Exists };

struct FOAst {
  FOKind kind;
  std::string rel;
  std::vector<FOTerm> args;  // Rel: relation arity; Eq: exactly 2
  std::vector<std::shared_ptr<FOAst>> kids;
  std::string var, sort;  // quantifiers
};

struct FOSentence {
  FOSignature sig;
  std::shared_ptr<FOAst> root;  // closed, well-sorted (checked on parse/build)
};

struct Interpretation {
  std::map<std::string, int> domain_size;  // sort -> |I(sort)| >= 1
};

// Sentence file grammar (s-expressions):
//   (fo (sorts s1 s2 ...)
//       (rel R s1 s2)
//       ...
//       (sentence (forall (x s1) (exists (y s2) (rel R x y)))))
// Terms are variables or 1-based domain constants (`1`, `2`, ... or `c1`).
// Connectives: and/or/imp/not, (= t1 t2), true, false.
FOSentence parse_fo(const std::string& text);
std::string print_fo(const FOSentence& s);

// Propositional translation over finite domains: equalities decide to
// constants, relation facts become atoms named by (relation, argument tuple),
// quantifiers become big conjunctions/disjunctions over the domain. The atom
// table is pre-populated with the full relation grid in lexicographic order.
F fo_translate(const FOSentence& s, const Interpretation& I, AtomTable& atoms);

// Optional constant folding: absorbs true/false, rewrites (x -> false) into a
// pushed-down negation, drops decided quantifier branches. Preserves classical
// equivalence; a big connective keeps its node even with one surviving child.
F fold_constants(const F& f);

// One translation per n in [n_lo, n_hi], domains sized by per-sort functions.
std::vector<F> fo_family(const FOSentence& s,
                         const std::map<std::string, std::function<int(int)>>& size_of,
                         int n_lo, int n_hi, bool fold, AtomTable& atoms);

// Direct finite model checking: the independent oracle for the translation.
// `extension` maps each relation to its set of satisfied argument tuples.
using FOExtension = std::map<std::string, std::set<std::vector<int>>>;
bool fo_holds(const FOSentence& s, const Interpretation& I, const FOExtension& ext);

// All extensions of the relation symbols over I (exponential; caller caps).
std::vector<FOExtension> fo_all_extensions(const FOSignature& sig, const Interpretation& I,
                                           uint64_t cap = 1ull << 12);
// Boolean assignment corresponding to an extension, over the translation table.
Assignment fo_extension_assignment(const FOSignature& sig, const Interpretation& I,
                                   const FOExtension& ext, const AtomTable& atoms);

// The worked translation examples: functionality / injectivity / totality of a
// binary relation R between sorts sigma and tau.
FOSentence fo_example_functionality();
FOSentence fo_example_injectivity();
FOSentence fo_example_totality();

}  // namespace pc
