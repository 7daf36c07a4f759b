#include "proofcomp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pc {

namespace {

AtomTable grid_table(const std::string& kind, int a, int b) {
  std::vector<AtomName> names;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) names.push_back(AtomName::indexed(kind, {i, j}));
  return AtomTable::from_names(std::move(names));
}

}  // namespace

ClauseSet php(int pigeons, int holes) {
  if (pigeons < 1 || holes < 1) throw DomainError("php: pigeons and holes must be >= 1");
  ClauseSet cs;
  cs.atoms = grid_table("p", pigeons, holes);
  auto p = [&](int i, int j) { return cs.atoms.id_of(AtomName::indexed("p", {i, j})); };
  // functionality: a pigeon sits in at most one hole
  for (int i = 1; i <= pigeons; ++i)
    for (int j1 = 1; j1 <= holes; ++j1)
      for (int j2 = j1 + 1; j2 <= holes; ++j2)
        cs.clauses.push_back(Clause::of({neg(p(i, j1)), neg(p(i, j2))}));
  // injectivity: a hole holds at most one pigeon
  for (int i1 = 1; i1 <= pigeons; ++i1)
    for (int i2 = i1 + 1; i2 <= pigeons; ++i2)
      for (int j = 1; j <= holes; ++j)
        cs.clauses.push_back(Clause::of({neg(p(i1, j)), neg(p(i2, j))}));
  // totality: every pigeon sits somewhere
  for (int i = 1; i <= pigeons; ++i) {
    std::vector<Lit> ls;
    for (int j = 1; j <= holes; ++j) ls.push_back(pos(p(i, j)));
    cs.clauses.push_back(Clause::of(std::move(ls)));
  }
  return cs;
}

std::vector<ClauseSet> php_family(const std::function<int(int)>& m_of_n, int n_lo, int n_hi) {
  std::vector<ClauseSet> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(php(m_of_n(n), n));
  return out;
}

namespace {

std::vector<AtomName> edge_names(int n) {
  std::vector<AtomName> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) names.push_back(AtomName::indexed("p", {i, j}));
  return names;
}

// Clique clauses into an existing table that already has the edge atoms.
void emit_clique(ClauseSet& cs, int n, int k, std::vector<int>* idx_out) {
  auto p = [&](int i, int j) {
    return cs.atoms.id_of(AtomName::indexed("p", {std::min(i, j), std::max(i, j)}));
  };
  auto q = [&](int u, int i) { return cs.atoms.id_of(AtomName::indexed("q", {u, i})); };
  auto push = [&](Clause c) {
    if (idx_out) idx_out->push_back(static_cast<int>(cs.clauses.size()));
    cs.clauses.push_back(std::move(c));
  };
  // every clique slot picks a vertex
  for (int u = 1; u <= k; ++u) {
    std::vector<Lit> ls;
    for (int i = 1; i <= n; ++i) ls.push_back(pos(q(u, i)));
    push(Clause::of(std::move(ls)));
  }
  // a slot picks at most one vertex
  for (int u = 1; u <= k; ++u)
    for (int i1 = 1; i1 <= n; ++i1)
      for (int i2 = i1 + 1; i2 <= n; ++i2)
        push(Clause::of({neg(q(u, i1)), neg(q(u, i2))}));
  // distinct slots pick distinct vertices
  for (int u1 = 1; u1 <= k; ++u1)
    for (int u2 = u1 + 1; u2 <= k; ++u2)
      for (int i = 1; i <= n; ++i)
        push(Clause::of({neg(q(u1, i)), neg(q(u2, i))}));
  // picked vertices are adjacent; one clause per slot pair per ordered
  // placement onto an unordered vertex pair
  for (int u1 = 1; u1 <= k; ++u1)
    for (int u2 = u1 + 1; u2 <= k; ++u2)
      for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2) {
          push(Clause::of({neg(q(u1, i1)), neg(q(u2, i2)), pos(p(i1, i2))}));
          push(Clause::of({neg(q(u1, i2)), neg(q(u2, i1)), pos(p(i1, i2))}));
        }
}

void emit_color(ClauseSet& cs, int n, int l, std::vector<int>* idx_out) {
  auto p = [&](int i, int j) {
    return cs.atoms.id_of(AtomName::indexed("p", {std::min(i, j), std::max(i, j)}));
  };
  auto r = [&](int i, int a) { return cs.atoms.id_of(AtomName::indexed("r", {i, a})); };
  auto push = [&](Clause c) {
    if (idx_out) idx_out->push_back(static_cast<int>(cs.clauses.size()));
    cs.clauses.push_back(std::move(c));
  };
  // every vertex gets a color
  for (int i = 1; i <= n; ++i) {
    std::vector<Lit> ls;
    for (int a = 1; a <= l; ++a) ls.push_back(pos(r(i, a)));
    push(Clause::of(std::move(ls)));
  }
  // at most one color per vertex
  for (int i = 1; i <= n; ++i)
    for (int a1 = 1; a1 <= l; ++a1)
      for (int a2 = a1 + 1; a2 <= l; ++a2)
        push(Clause::of({neg(r(i, a1)), neg(r(i, a2))}));
  // adjacent vertices get different colors
  for (int a = 1; a <= l; ++a)
    for (int i1 = 1; i1 <= n; ++i1)
      for (int i2 = i1 + 1; i2 <= n; ++i2)
        push(Clause::of({neg(r(i1, a)), neg(r(i2, a)), neg(p(i1, i2))}));
}

}  // namespace

ClauseSet clique_clauses(int n, int k) {
  if (k < 1 || k > n) throw DomainError("clique: need 1 <= k <= n");
  std::vector<AtomName> names = edge_names(n);
  for (int u = 1; u <= k; ++u)
    for (int i = 1; i <= n; ++i) names.push_back(AtomName::indexed("q", {u, i}));
  ClauseSet cs;
  cs.atoms = AtomTable::from_names(std::move(names));
  emit_clique(cs, n, k, nullptr);
  return cs;
}

ClauseSet color_clauses(int n, int l) {
  if (l < 1 || l > n) throw DomainError("color: need 1 <= l <= n");
  std::vector<AtomName> names = edge_names(n);
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= l; ++a) names.push_back(AtomName::indexed("r", {i, a}));
  ClauseSet cs;
  cs.atoms = AtomTable::from_names(std::move(names));
  emit_color(cs, n, l, nullptr);
  return cs;
}

CliqueColorInstance clique_color_instance(int n, int k, int l) {
  if (!(1 <= l && l < k && k <= n)) throw DomainError("clique-color: need 1 <= l < k <= n");
  std::vector<AtomName> names = edge_names(n);
  for (int u = 1; u <= k; ++u)
    for (int i = 1; i <= n; ++i) names.push_back(AtomName::indexed("q", {u, i}));
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= l; ++a) names.push_back(AtomName::indexed("r", {i, a}));
  CliqueColorInstance inst;
  inst.combined.atoms = AtomTable::from_names(std::move(names));
  emit_clique(inst.combined, n, k, &inst.clique_clause_idx);
  emit_color(inst.combined, n, l, &inst.color_clause_idx);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      inst.edge_atoms.push_back(inst.combined.atoms.id_of(AtomName::indexed("p", {i, j})));
  for (int u = 1; u <= k; ++u)
    for (int i = 1; i <= n; ++i)
      inst.clique_atoms.push_back(inst.combined.atoms.id_of(AtomName::indexed("q", {u, i})));
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= l; ++a)
      inst.color_atoms.push_back(inst.combined.atoms.id_of(AtomName::indexed("r", {i, a})));
  std::sort(inst.edge_atoms.begin(), inst.edge_atoms.end());
  std::sort(inst.clique_atoms.begin(), inst.clique_atoms.end());
  std::sort(inst.color_atoms.begin(), inst.color_atoms.end());
  return inst;
}

F clique_color_tautology(int n, int k, int l) {
  CliqueColorInstance inst = clique_color_instance(n, k, l);
  std::vector<F> clique_fs, color_fs;
  for (int i : inst.clique_clause_idx) clique_fs.push_back(inst.combined.clauses[i].to_formula());
  for (int i : inst.color_clause_idx) color_fs.push_back(inst.combined.clauses[i].to_formula());
  return mk_imp(and_all(clique_fs), mk_not(and_all(color_fs)));
}

std::pair<int, int> epsilon_clique_color_params(int n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0))
    throw DomainError("epsilon must lie strictly between 0 and 1/3");
  int k = static_cast<int>(std::floor(std::pow(n, 2.0 / 3.0) + 1e-9));
  int l = static_cast<int>(std::floor(std::pow(n, 2.0 / 3.0 - 2.0 * epsilon) + 1e-9));
  if (l >= k)
    throw DomainError("epsilon instance degenerates at n=" + std::to_string(n) +
                      " (l >= k); use explicit k and l");
  return {k, l};
}

namespace {

std::vector<AtomId> shared_atoms(const F& phi, const F& psi) {
  const auto& a = phi->vars();
  const auto& b = psi->vars();
  std::vector<AtomId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ~~psi, except that an already negated psi stays single-negated (triple
// negation is intuitionistically equivalent to single).
F double_neg(const F& psi) {
  if (psi->kind == Kind::Not) return psi;
  if (psi->kind == Kind::Imp && psi->kids[1]->kind == Kind::False) return psi;
  return mk_not(mk_not(psi));
}

LiftResult lift_impl(const F& phi, const F& psi, bool monotone, bool modal, const BruteOpts& opts) {
  if (!is_valid(mk_imp(phi, psi), opts))
    throw DomainError("lift: the implication phi -> psi is not classically valid");
  LiftResult res;
  res.shared = shared_atoms(phi, psi);
  std::set<AtomId> pbar(res.shared.begin(), res.shared.end());
  auto boxed = [&](const F& f) { return modal ? mk_box(f) : f; };

  F phi_s = phi, psi_s = psi;
  std::vector<F> chain;
  if (!monotone) {
    for (AtomId pPool : res.shared)
      chain.push_back(mk_or(boxed(atom(pPool)), boxed(mk_not(atom(pPool)))));
  } else {
    if (!is_monotone_in(phi, pbar) && !is_monotone_in(psi, pbar))
      throw DomainError("lift: monotone mode needs phi or psi monotone in the shared atoms");
    AtomId next = 0;
    for (AtomId v : phi->vars()) next = std::max(next, v + 1);
    for (AtomId v : psi->vars()) next = std::max(next, v + 1);
    std::unordered_map<AtomId, F> to_neg, to_fresh;
    for (AtomId pShared : res.shared) {
      AtomId fresh = next++;
      res.fresh.push_back(fresh);
      to_neg.emplace(pShared, mk_not(atom(pShared)));
      to_fresh.emplace(pShared, atom(fresh));
      chain.push_back(mk_or(boxed(atom(pShared)), boxed(atom(fresh))));
    }
    phi_s = substitute_atoms(phi, to_neg);
    psi_s = substitute_atoms(psi, to_fresh);
  }
  F left = chain.empty() ? top() : and_all(chain);
  F right = modal ? mk_or(mk_box(mk_not(phi_s)), mk_box(psi_s))
                  : mk_or(mk_not(phi_s), double_neg(psi_s));
  res.formula = mk_imp(left, right);
  return res;
}

}  // namespace

LiftResult lift_intuitionistic(const F& phi, const F& psi, bool monotone, const BruteOpts& opts) {
  return lift_impl(phi, psi, monotone, /*modal=*/false, opts);
}

LiftResult lift_modal(const F& phi, const F& psi, bool monotone, const BruteOpts& opts) {
  return lift_impl(phi, psi, monotone, /*modal=*/true, opts);
}

}  // namespace pc
