#pragma once

#include <functional>
#include <vector>

#include "proofcomp/clauses.hpp"
#include "proofcomp/formula.hpp"

namespace pc {

// Pigeonhole clauses over p_{i,j} (pigeon i in hole j): functionality,
// injectivity, totality. Unsatisfiable exactly when pigeons > holes.
ClauseSet php(int pigeons, int holes);
// One clause set per n in [n_lo, n_hi], with m(n) pigeons over n holes.
std::vector<ClauseSet> php_family(const std::function<int(int)>& m_of_n, int n_lo, int n_hi);

// k-clique selector clauses over edge atoms p_{i,j} (i<j) and selector atoms
// q_{u,i}; monotone in the edge atoms.
ClauseSet clique_clauses(int n, int k);
// l-coloring clauses over edge atoms p_{i,j} and color atoms r_{i,a}; edge
// atoms occur only negatively.
ClauseSet color_clauses(int n, int l);

// Both families over one shared atom table (edge atoms common).
struct CliqueColorInstance {
  ClauseSet combined;
  std::vector<int> clique_clause_idx;  // indices into combined.clauses
  std::vector<int> color_clause_idx;
  std::vector<AtomId> edge_atoms;    // shared p
  std::vector<AtomId> clique_atoms;  // q
  std::vector<AtomId> color_atoms;   // r
};
CliqueColorInstance clique_color_instance(int n, int k, int l);

// Conjunction(clique) -> not Conjunction(color); valid whenever l < k <= n
// (rejected otherwise).
F clique_color_tautology(int n, int k, int l);

// k = floor(n^{2/3}), l = floor(n^{2/3-2e}); rejects degenerate l >= k.
std::pair<int, int> epsilon_clique_color_params(int n, double epsilon);

struct LiftResult {
  F formula;
  std::vector<AtomId> shared;  // p-bar
  std::vector<AtomId> fresh;   // q-bar, monotone mode only
};

// Intuitionistic lift of a classical implication phi -> psi over the shared
// atoms: /\(p v ~p) -> (~phi v ~~psi), or the monotone variant
// /\(p v q) -> (~phi(~p) v ~~psi(q)) with fresh q-bar. A doubly negated psi
// collapses to psi when psi is itself a negation.
LiftResult lift_intuitionistic(const F& phi, const F& psi, bool monotone,
                               const BruteOpts& opts = {});
// Modal (K) lift: /\(box p v box ~p) -> (box ~phi v box psi), monotone variant
// /\(box p v box q) -> (box ~phi(~p) v box psi(q)).
LiftResult lift_modal(const F& phi, const F& psi, bool monotone, const BruteOpts& opts = {});

}  // namespace pc
