#pragma once

#include <memory>
#include <string>
#include <vector>

#include "proofcomp/formula.hpp"

namespace pc {

struct Sequent {
  std::vector<F> ante, succ;
  bool operator==(const Sequent& o) const;
};

std::vector<AtomId> sequent_vars(const Sequent& s);
int64_t sequent_symbols(const Sequent& s);  // sum of formula sizes
// Classical validity of /\ante -> \/succ by brute force.
bool sequent_valid(const Sequent& s, const BruteOpts& opts = {});
std::string print_sequent(const Sequent& s);

// --- calculi -----------------------------------------------------------------

enum class CalculusId { LK, LKn, LKd, LJ, K, D, KT, K4, KD4, S4, GL };

struct Calculus {
  CalculusId id = CalculusId::LK;
  bool cut_free = false;
  int depth_cap = 0;  // LKd only

  std::string name() const;                    // e.g. "lkn-", "lkd:2", "s4"
  static Calculus parse(const std::string&);   // throws ParseError
  bool modal() const;
  bool single_conclusion() const { return id == CalculusId::LJ; }
  Language language() const;
};

// --- rules ---------------------------------------------------------------------

enum class RuleId {
  // axioms
  AxId, AxBot, AxTop, AxPairL, AxPairR, AxNTop, AxNBot,
  // structural
  ExL, ExR, Cut, WkL, WkR, CtrL, CtrR,
  // binary connective rules
  AndL1, AndL2, AndR, OrL, OrR1, OrR2, ImpL, ImpR, NegL, NegR,
  // unbounded-arity connective rules
  BigAndL, BigAndR, BigOrL, BigOrR,
  // modal rules
  K, D, K4, KD4, S4L, S4R, GL,
};

const char* rule_name(RuleId r);
bool rule_from_name(const std::string& s, RuleId& out);
int rule_premises(RuleId r, const Sequent& conclusion, int pos);  // -1 = variable
bool rule_takes_pos(RuleId r);
bool rule_takes_arg(RuleId r);  // big-rule child selector

struct ProofNode {
  Sequent seq;
  RuleId rule = RuleId::AxId;
  int pos = -1;  // 0-based principal position
  int arg = -1;  // 1-based child selector for lband/rbor
  std::vector<std::unique_ptr<ProofNode>> kids;
  int script_id = -1;  // id from the proof script, for diagnostics

  ProofNode() = default;
  ~ProofNode();  // iterative teardown; weakening chains can be deep
  ProofNode(const ProofNode&) = delete;
  ProofNode& operator=(const ProofNode&) = delete;
  ProofNode(ProofNode&&) = default;
  ProofNode& operator=(ProofNode&&) = default;
};

struct SequentProof {
  Calculus calc;
  std::unique_ptr<ProofNode> root;
};

std::unique_ptr<ProofNode> clone_node(const ProofNode& n);

struct KernelVerdict {
  bool accepted = false;
  std::string reason;      // first offending node, on reject
  int node_id = -1;        // script id if present, else preorder index
  std::string rule;        // offending rule name
  int64_t proof_size = 0;  // total symbols across all sequents
  int64_t node_count = 0;
};

// Rule-by-rule structural check: every node must be an exact instance of a
// rule of the calculus, with explicit positions and no implicit reordering.
KernelVerdict check_sequent_proof(const SequentProof& p);

int64_t proof_symbols(const ProofNode& n);

// --- proof scripts --------------------------------------------------------------
//
//   calculus lkn-
//   node 1 ax : (atom 0) => (atom 0)
//   node 2 ror1 0 from 1 : (atom 0) => (or (atom 0) (atom 1))
//   root 2
//
// Rule arguments (position, big-rule child index) follow the rule name;
// children follow `from`; the node's sequent follows `:` with `=>` between
// antecedent and succedent. Node ids are arbitrary; each node feeds at most
// one parent (proofs are trees).

std::string print_proof(const SequentProof& p);
SequentProof parse_proof(const std::string& text);

}  // namespace pc
