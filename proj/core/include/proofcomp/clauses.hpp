#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proofcomp/formula.hpp"
#include "proofcomp/names.hpp"

namespace pc {

struct Lit {
  AtomId atom;
  bool neg;
  auto tie() const { return std::tie(atom, neg); }
  bool operator<(const Lit& o) const { return tie() < o.tie(); }
  bool operator==(const Lit& o) const { return tie() == o.tie(); }
  Lit dual() const { return Lit{atom, !neg}; }
};

inline Lit pos(AtomId a) { return Lit{a, false}; }
inline Lit neg(AtomId a) { return Lit{a, true}; }

// Sorted, duplicate-free literal sequence. May contain a complementary pair;
// such clauses are tautological and are never produced by the generators.
struct Clause {
  std::vector<Lit> lits;

  static Clause of(std::vector<Lit> ls);
  bool empty() const { return lits.empty(); }
  bool contains(const Lit& l) const;
  bool is_tautological() const;
  bool operator==(const Clause& o) const { return lits == o.lits; }
  bool operator<(const Clause& o) const { return lits < o.lits; }

  F to_formula() const;  // left-nested disjunction; empty clause is false
};

// Resolvent (c \ {p}) u (d \ {~p}); throws if the pivot literals are absent.
Clause resolve_clauses(const Clause& c, const Clause& d, AtomId pivot);

struct ClauseSet {
  AtomTable atoms;  // dense ids 0..n_vars-1, total over all clause literals
  std::vector<Clause> clauses;

  int n_vars() const { return static_cast<int>(atoms.size()); }
  F to_formula() const;  // conjunction of clause disjunctions
};

// Satisfiability by exhaustive 64-lane enumeration over all n_vars atoms.
// `fixed` pins some atoms; enumeration runs over the rest.
std::optional<Assignment> clause_set_satisfying(const ClauseSet& cs, const BruteOpts& opts = {},
                                                const std::vector<std::pair<AtomId, bool>>& fixed = {});
bool clause_set_satisfiable(const ClauseSet& cs, const BruteOpts& opts = {},
                            const std::vector<std::pair<AtomId, bool>>& fixed = {});

// DIMACS CNF with a comment header mapping structured atom names to variable
// numbers (variable i+1 is atom id i). Byte-identical across runs.
std::string to_dimacs(const ClauseSet& cs);
ClauseSet from_dimacs(const std::string& text);

}  // namespace pc
