#include "proofcomp/clauses.hpp"

#include <algorithm>
#include <sstream>

#include "proofcomp/brute.hpp"

namespace pc {

Clause Clause::of(std::vector<Lit> ls) {
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return Clause{std::move(ls)};
}

bool Clause::contains(const Lit& l) const {
  return std::binary_search(lits.begin(), lits.end(), l);
}

bool Clause::is_tautological() const {
  for (size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i].atom == lits[i + 1].atom) return true;
  return false;
}

F Clause::to_formula() const {
  std::vector<F> ds;
  ds.reserve(lits.size());
  for (const Lit& l : lits) ds.push_back(l.neg ? mk_not(atom(l.atom)) : atom(l.atom));
  return or_all(ds);
}

Clause resolve_clauses(const Clause& c, const Clause& d, AtomId pivot) {
  if (!c.contains(pos(pivot)))
    throw DomainError("resolution: left premise lacks positive pivot " + std::to_string(pivot));
  if (!d.contains(neg(pivot)))
    throw DomainError("resolution: right premise lacks negative pivot " + std::to_string(pivot));
  std::vector<Lit> out;
  out.reserve(c.lits.size() + d.lits.size() - 2);
  for (const Lit& l : c.lits)
    if (!(l.atom == pivot && !l.neg)) out.push_back(l);
  for (const Lit& l : d.lits)
    if (!(l.atom == pivot && l.neg)) out.push_back(l);
  return Clause::of(std::move(out));
}

F ClauseSet::to_formula() const {
  std::vector<F> cs;
  cs.reserve(clauses.size());
  for (const Clause& c : clauses) cs.push_back(c.to_formula());
  return and_all(cs);
}

std::optional<Assignment> clause_set_satisfying(const ClauseSet& cs, const BruteOpts& opts,
                                                const std::vector<std::pair<AtomId, bool>>& fixed) {
  const int n = cs.n_vars();
  std::vector<int8_t> pin(n, -1);
  for (auto& [id, bit] : fixed) {
    if (id < 0 || id >= n) throw DomainError("fixed atom outside clause-set variables");
    pin[id] = bit ? 1 : 0;
  }
  std::vector<AtomId> free_vars;
  for (AtomId v = 0; v < n; ++v)
    if (pin[v] < 0) free_vars.push_back(v);
  std::vector<int> free_pos(n, -1);
  for (size_t i = 0; i < free_vars.size(); ++i) free_pos[free_vars[i]] = static_cast<int>(i);

  auto idx = brute_find(free_vars.size(), opts, [&](uint64_t lo) -> uint64_t {
    uint64_t all = ~0ull;
    for (const Clause& c : cs.clauses) {
      uint64_t w = 0;
      for (const Lit& l : c.lits) {
        uint64_t v = pin[l.atom] >= 0 ? (pin[l.atom] ? ~0ull : 0ull)
                                      : var_lanes(static_cast<size_t>(free_pos[l.atom]), lo);
        w |= l.neg ? ~v : v;
        if (w == ~0ull) break;
      }
      all &= w;
      if (!all) break;
    }
    return all;
  });
  if (!idx) return std::nullopt;
  Assignment a = Assignment::from_bits(free_vars, *idx);
  for (auto& [id, bit] : fixed) a.set(id, bit);
  return a;
}

bool clause_set_satisfiable(const ClauseSet& cs, const BruteOpts& opts,
                            const std::vector<std::pair<AtomId, bool>>& fixed) {
  return clause_set_satisfying(cs, opts, fixed).has_value();
}

std::string to_dimacs(const ClauseSet& cs) {
  std::ostringstream os;
  for (int v = 0; v < cs.n_vars(); ++v)
    os << "c atom " << (v + 1) << " " << cs.atoms.display(v) << "\n";
  os << "p cnf " << cs.n_vars() << " " << cs.clauses.size() << "\n";
  for (const Clause& c : cs.clauses) {
    for (const Lit& l : c.lits) os << (l.neg ? "-" : "") << (l.atom + 1) << " ";
    os << "0\n";
  }
  return os.str();
}

namespace {

AtomName parse_display_name(const std::string& s) {
  // kind_i1_i2..., falling back to an opaque kind when indices do not parse
  AtomName n;
  size_t us = s.find('_');
  if (us == std::string::npos || s.substr(0, 4) == "ext(") {
    n.kind = s;
    return n;
  }
  n.kind = s.substr(0, us);
  size_t pos = us;
  while (pos != std::string::npos && pos < s.size()) {
    size_t next = s.find('_', pos + 1);
    std::string part = s.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument("junk");
      n.idx.push_back(v);
    } catch (...) {
      return AtomName{s, {}, {}};  // opaque
    }
    pos = next;
  }
  return n;
}

}  // namespace

ClauseSet from_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  ClauseSet cs;
  std::vector<std::pair<int, AtomName>> declared;
  int n_vars = -1, n_clauses = -1;
  size_t lineno = 0;
  std::vector<Lit> cur;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") {
      std::string kw;
      if (ls >> kw && kw == "atom") {
        int var;
        std::string name;
        if (ls >> var >> name) declared.emplace_back(var, parse_display_name(name));
      }
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n_vars >> n_clauses) || fmt != "cnf")
        throw ParseError("dimacs: bad problem line", lineno);
      continue;
    }
    if (n_vars < 0) throw ParseError("dimacs: clause before problem line", lineno);
    ls.clear();
    ls.str(line);
    long v;
    while (ls >> v) {
      if (v == 0) {
        cs.clauses.push_back(Clause::of(std::move(cur)));
        cur.clear();
      } else {
        long a = std::labs(v) - 1;
        if (a >= n_vars) throw ParseError("dimacs: literal exceeds declared variables", lineno);
        cur.push_back(Lit{static_cast<AtomId>(a), v < 0});
      }
    }
  }
  if (!cur.empty()) throw ParseError("dimacs: unterminated clause");
  if (n_vars < 0) throw ParseError("dimacs: missing problem line");
  if (n_clauses >= 0 && static_cast<size_t>(n_clauses) != cs.clauses.size())
    throw ParseError("dimacs: clause count mismatch");
  std::vector<AtomName> names(n_vars);
  for (int v = 0; v < n_vars; ++v) names[v] = AtomName::indexed("v", {v + 1});
  for (auto& [var, nm] : declared) {
    if (var < 1 || var > n_vars) throw ParseError("dimacs: atom comment for unknown variable");
    names[var - 1] = nm;
  }
  for (auto& nm : names) cs.atoms.add(std::move(nm));
  return cs;
}

}  // namespace pc
