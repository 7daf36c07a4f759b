#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "proofcomp/util.hpp"

namespace pc {

using AtomId = int;

enum class Kind : uint8_t {
  Atom,     // propositional variable, by id
  ExtAtom,  // named atom <phi> wrapping a formula; behaves as an atom
  True,
  False,
  Not,
  And,      // binary
  Or,       // binary
  Imp,      // binary
  Box,      // unary modality
  BigAnd,   // >= 1 children
  BigOr,    // >= 1 children
};

// Feature bits describing which connectives occur somewhere in a formula.
// Language membership tests are derived from these.
enum FormulaFeat : uint8_t {
  kFeatNot = 1u << 0,
  kFeatImp = 1u << 1,
  kFeatBox = 1u << 2,
  kFeatBig = 1u << 3,
  kFeatBin = 1u << 4,  // binary and/or
  kFeatExt = 1u << 5,
};

class Formula;
using F = std::shared_ptr<const Formula>;

class Formula {
 public:
  Kind kind;
  AtomId atom = -1;      // Kind::Atom
  F wrapped;             // Kind::ExtAtom
  std::vector<F> kids;   // connectives
  uint64_t hash = 0;     // structural hash
  int64_t size = 0;      // AST node count; ExtAtom counts 1 + wrapped
  uint8_t feats = 0;

  // Sorted set of atom ids occurring in the formula. Extended atoms are not
  // included; callers intern them first (see ExtInterner).
  const std::vector<AtomId>& vars() const;

 private:
  mutable std::once_flag vars_once_;
  mutable std::vector<AtomId> vars_;
};

// --- constructors -----------------------------------------------------------

F atom(AtomId id);
F ext_atom(const F& wrapped);
F top();
F bot();
F mk_not(const F& a);
F mk_and(const F& a, const F& b);
F mk_or(const F& a, const F& b);
F mk_imp(const F& a, const F& b);
F mk_box(const F& a);
F big_and(std::vector<F> kids);
F big_or(std::vector<F> kids);
// Left-nested binary chain; empty input yields top/bot.
F and_all(const std::vector<F>& fs);
F or_all(const std::vector<F>& fs);

bool equal(const F& a, const F& b);

// --- language predicates -----------------------------------------------------

enum class Language { Lb, LbU, Lp, LBox, LpExt, LBoxExt };

bool in_language(const F& f, Language lang);
const char* language_name(Language lang);

inline bool has_modality(const F& f) { return f->feats & kFeatBox; }
inline bool has_ext_atoms(const F& f) { return f->feats & kFeatExt; }

// --- assignments & evaluation ------------------------------------------------

// Total map atom id -> bit over a declared support. Querying an uncovered atom
// is an error, never a default.
class Assignment {
 public:
  Assignment() = default;
  void set(AtomId id, bool bit);
  bool covers(AtomId id) const;
  bool at(AtomId id) const;  // throws DomainError if not covered
  // Assignment of `mask` bits to `vars[0..k)`, bit i of mask -> vars[i].
  static Assignment from_bits(const std::vector<AtomId>& vars, uint64_t mask);

 private:
  std::vector<int8_t> bits_;  // -1 = uncovered
};

// Classical evaluation. Preconditions: no Box, no ExtAtom; `a` covers vars(f).
bool eval(const F& f, const Assignment& a);

// 64-lane evaluation: each atom maps to a 64-bit word, one assignment per lane.
// Shared subformulas are evaluated once per call (memoized on node identity).
uint64_t eval64(const F& f, const std::unordered_map<const Formula*, uint64_t>& atom_lanes,
                std::unordered_map<const Formula*, uint64_t>& memo);

struct BruteOpts {
  int atom_cap = 24;   // refuse enumeration beyond 2^atom_cap assignments
  int workers = 1;
};

// Brute-force validity / satisfiability over vars(f).
bool is_valid(const F& f, const BruteOpts& opts = {});
bool is_satisfiable(const F& f, const BruteOpts& opts = {});
// Lowest-index falsifying/satisfying assignment, if any.
std::optional<Assignment> find_falsifying(const F& f, const BruteOpts& opts = {});
std::optional<Assignment> find_satisfying(const F& f, const BruteOpts& opts = {});

// --- normal forms & syntactic predicates --------------------------------------

// Negation normal form; eliminates -> classically, pushes negations to atoms
// and constants. Input over Lb, LbU or Lp; modal or extended input is an error.
F to_nnf(const F& f);

// Monotone in P: NNF(f) contains no negated atom from P.
bool is_monotone_in(const F& f, const std::set<AtomId>& p);
// Literally monotone: contains no negation or implication node.
bool is_monotone(const F& f);

// Depth over LbU: atoms/constants 0, negation transparent, each (big)
// conjunction/disjunction level adds 1. Implication or modality is an error.
int depth(const F& f);

// Replace every extended atom <phi> by phi (and <box phi> by box phi),
// recursively. Result has no extended atoms.
F standard_substitute(const F& f);

// Simultaneous substitution of formulas for atoms.
F substitute_atoms(const F& f, const std::unordered_map<AtomId, F>& sub);

// --- text format ---------------------------------------------------------------
//
//   f := true | false | (atom N) | (not f) | (and f f) | (or f f) | (imp f f)
//      | (box f) | (bigand f ...) | (bigor f ...) | (ext f)
//
// Printing is canonical (lowercase, single spaces); parse(print(f)) == f.

std::string print_formula(const F& f);
F parse_formula(const std::string& text);
F parse_formula_at(const std::string& text, size_t& pos);  // advances pos

}  // namespace pc
