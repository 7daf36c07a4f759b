#include "proofcomp/fo.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace pc {

namespace {

using Ast = std::shared_ptr<FOAst>;

Ast node(FOKind k) {
  auto a = std::make_shared<FOAst>();
  a->kind = k;
  return a;
}

// ---- sort checking ---------------------------------------------------------

void check_sorted(FOAst& a, const FOSignature& sig, std::map<std::string, std::string>& scope) {
  auto resolve_term = [&](FOTerm& t, const std::string& expected) {
    if (t.is_var) {
      auto it = scope.find(t.var);
      if (it == scope.end()) throw DomainError("fo: unbound variable " + t.var);
      t.sort = it->second;
    } else if (t.sort.empty()) {
      t.sort = expected;
    }
    if (!expected.empty() && t.sort != expected)
      throw DomainError("fo: term of sort " + t.sort + " where " + expected + " expected");
    if (t.sort.empty()) throw DomainError("fo: cannot infer sort of constant");
  };
  switch (a.kind) {
    case FOKind::True:
    case FOKind::False: return;
    case FOKind::Rel: {
      auto it = sig.relations.find(a.rel);
      if (it == sig.relations.end()) throw DomainError("fo: unknown relation " + a.rel);
      if (it->second.size() != a.args.size())
        throw DomainError("fo: relation " + a.rel + " expects " +
                          std::to_string(it->second.size()) + " arguments, got " +
                          std::to_string(a.args.size()));
      for (size_t i = 0; i < a.args.size(); ++i) resolve_term(a.args[i], it->second[i]);
      return;
    }
    case FOKind::Eq: {
      if (a.args.size() != 2) throw DomainError("fo: equality takes two terms");
      // infer each side; a constant borrows the other side's sort
      if (a.args[0].is_var) resolve_term(a.args[0], "");
      if (a.args[1].is_var) resolve_term(a.args[1], "");
      std::string s = !a.args[0].sort.empty() ? a.args[0].sort : a.args[1].sort;
      resolve_term(a.args[0], s);
      resolve_term(a.args[1], s);
      return;
    }
    case FOKind::Not:
      check_sorted(*a.kids[0], sig, scope);
      return;
    case FOKind::And:
    case FOKind::Or:
    case FOKind::Imp:
      check_sorted(*a.kids[0], sig, scope);
      check_sorted(*a.kids[1], sig, scope);
      return;
    case FOKind::Forall:
    case FOKind::Exists: {
      if (std::find(sig.sorts.begin(), sig.sorts.end(), a.sort) == sig.sorts.end())
        throw DomainError("fo: unknown sort " + a.sort);
      auto prev = scope.find(a.var);
      std::string saved;
      bool had = prev != scope.end();
      if (had) saved = prev->second;
      scope[a.var] = a.sort;
      check_sorted(*a.kids[0], sig, scope);
      if (had) scope[a.var] = saved; else scope.erase(a.var);
      return;
    }
  }
}

// ---- parsing ----------------------------------------------------------------

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string tok(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' &&
         s[pos] != ')')
    ++pos;
  if (start == pos) throw ParseError("fo: expected token", pos);
  return s.substr(start, pos - start);
}

void expect(const std::string& s, size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(std::string("fo: expected '") + c + "'", pos);
  ++pos;
}

FOTerm parse_term(const std::string& tk) {
  FOTerm t;
  std::string digits = tk;
  if (!digits.empty() && (digits[0] == 'c' || digits[0] == 'C') && digits.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(digits[1])))
    digits = digits.substr(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    t.is_var = false;
    t.element = std::stoi(digits);
    if (t.element < 1) throw DomainError("fo: domain constants are 1-based");
    return t;
  }
  t.is_var = true;
  t.var = tk;
  return t;
}

Ast parse_ast(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("fo: unexpected end", pos);
  if (s[pos] != '(') {
    std::string t = tok(s, pos);
    if (t == "true") return node(FOKind::True);
    if (t == "false") return node(FOKind::False);
    throw ParseError("fo: unknown token " + t, pos);
  }
  ++pos;
  std::string head = tok(s, pos);
  Ast a;
  if (head == "forall" || head == "exists") {
    a = node(head == "forall" ? FOKind::Forall : FOKind::Exists);
    expect(s, pos, '(');
    a->var = tok(s, pos);
    a->sort = tok(s, pos);
    expect(s, pos, ')');
    a->kids.push_back(parse_ast(s, pos));
  } else if (head == "and" || head == "or" || head == "imp") {
    a = node(head == "and" ? FOKind::And : head == "or" ? FOKind::Or : FOKind::Imp);
    a->kids.push_back(parse_ast(s, pos));
    a->kids.push_back(parse_ast(s, pos));
  } else if (head == "not") {
    a = node(FOKind::Not);
    a->kids.push_back(parse_ast(s, pos));
  } else if (head == "rel") {
    a = node(FOKind::Rel);
    a->rel = tok(s, pos);
    while (true) {
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == ')') break;
      a->args.push_back(parse_term(tok(s, pos)));
    }
  } else if (head == "=") {
    a = node(FOKind::Eq);
    a->args.push_back(parse_term(tok(s, pos)));
    a->args.push_back(parse_term(tok(s, pos)));
  } else {
    throw ParseError("fo: unknown head " + head, pos);
  }
  expect(s, pos, ')');
  return a;
}

std::string print_term(const FOTerm& t) {
  return t.is_var ? t.var : std::to_string(t.element);
}

std::string print_ast(const FOAst& a) {
  switch (a.kind) {
    case FOKind::True: return "true";
    case FOKind::False: return "false";
    case FOKind::Eq: return "(= " + print_term(a.args[0]) + " " + print_term(a.args[1]) + ")";
    case FOKind::Rel: {
      std::string out = "(rel " + a.rel;
      for (const auto& t : a.args) out += " " + print_term(t);
      return out + ")";
    }
    case FOKind::Not: return "(not " + print_ast(*a.kids[0]) + ")";
    case FOKind::And: return "(and " + print_ast(*a.kids[0]) + " " + print_ast(*a.kids[1]) + ")";
    case FOKind::Or: return "(or " + print_ast(*a.kids[0]) + " " + print_ast(*a.kids[1]) + ")";
    case FOKind::Imp: return "(imp " + print_ast(*a.kids[0]) + " " + print_ast(*a.kids[1]) + ")";
    case FOKind::Forall:
    case FOKind::Exists:
      return std::string("(") + (a.kind == FOKind::Forall ? "forall" : "exists") + " (" + a.var +
             " " + a.sort + ") " + print_ast(*a.kids[0]) + ")";
  }
  return "?";
}

}  // namespace

FOSentence parse_fo(const std::string& text) {
  size_t pos = 0;
  expect(text, pos, '(');
  if (tok(text, pos) != "fo") throw ParseError("fo: file must start with (fo ...", pos);
  FOSentence out;
  bool have_sentence = false;
  while (true) {
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    expect(text, pos, '(');
    std::string head = tok(text, pos);
    if (head == "sorts") {
      while (true) {
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ')') break;
        out.sig.sorts.push_back(tok(text, pos));
      }
      expect(text, pos, ')');
    } else if (head == "rel") {
      std::string name = tok(text, pos);
      std::vector<std::string> sorts;
      while (true) {
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ')') break;
        sorts.push_back(tok(text, pos));
      }
      expect(text, pos, ')');
      out.sig.relations[name] = std::move(sorts);
    } else if (head == "sentence") {
      out.root = parse_ast(text, pos);
      expect(text, pos, ')');
      have_sentence = true;
    } else {
      throw ParseError("fo: unknown section " + head, pos);
    }
  }
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("fo: trailing input", pos);
  if (!have_sentence) throw ParseError("fo: missing (sentence ...)");
  std::map<std::string, std::string> scope;
  check_sorted(*out.root, out.sig, scope);
  return out;
}

std::string print_fo(const FOSentence& s) {
  std::ostringstream os;
  os << "(fo (sorts";
  for (const auto& x : s.sig.sorts) os << " " << x;
  os << ")";
  for (const auto& [name, sorts] : s.sig.relations) {
    os << " (rel " << name;
    for (const auto& x : sorts) os << " " << x;
    os << ")";
  }
  os << " (sentence " << print_ast(*s.root) << "))";
  return os.str();
}

namespace {

void grid_names(const FOSignature& sig, const Interpretation& I, std::vector<AtomName>& out) {
  for (const auto& [name, sorts] : sig.relations) {
    std::vector<int> sizes;
    for (const auto& s : sorts) {
      auto it = I.domain_size.find(s);
      if (it == I.domain_size.end() || it->second < 1)
        throw DomainError("fo: empty or missing domain for sort " + s);
      sizes.push_back(it->second);
    }
    std::vector<int> tuple(sizes.size(), 1);
    while (true) {
      out.push_back(AtomName::indexed(name, tuple));
      size_t d = tuple.size();
      while (d > 0) {
        if (++tuple[d - 1] <= sizes[d - 1]) break;
        tuple[d - 1] = 1;
        --d;
      }
      if (d == 0) break;
      if (tuple.empty()) break;
    }
    if (sizes.empty()) out.push_back(AtomName::indexed(name, {}));
  }
}

F translate_ast(const FOAst& a, const Interpretation& I, AtomTable& atoms,
                std::map<std::string, int>& env) {
  auto term_value = [&](const FOTerm& t) {
    if (!t.is_var) return t.element;
    auto it = env.find(t.var);
    if (it == env.end()) throw DomainError("fo: open sentence (unbound " + t.var + ")");
    return it->second;
  };
  switch (a.kind) {
    case FOKind::True: return top();
    case FOKind::False: return bot();
    case FOKind::Eq:
      return term_value(a.args[0]) == term_value(a.args[1]) ? top() : bot();
    case FOKind::Rel: {
      std::vector<int> tuple;
      tuple.reserve(a.args.size());
      for (const auto& t : a.args) tuple.push_back(term_value(t));
      return atom(atoms.id_of(AtomName::indexed(a.rel, tuple)));
    }
    case FOKind::Not: return mk_not(translate_ast(*a.kids[0], I, atoms, env));
    case FOKind::And:
      return mk_and(translate_ast(*a.kids[0], I, atoms, env),
                    translate_ast(*a.kids[1], I, atoms, env));
    case FOKind::Or:
      return mk_or(translate_ast(*a.kids[0], I, atoms, env),
                   translate_ast(*a.kids[1], I, atoms, env));
    case FOKind::Imp:
      return mk_imp(translate_ast(*a.kids[0], I, atoms, env),
                    translate_ast(*a.kids[1], I, atoms, env));
    case FOKind::Forall:
    case FOKind::Exists: {
      auto it = I.domain_size.find(a.sort);
      if (it == I.domain_size.end() || it->second < 1)
        throw DomainError("fo: empty or missing domain for sort " + a.sort);
      std::vector<F> kids;
      auto prev = env.find(a.var);
      int saved = prev == env.end() ? -1 : prev->second;
      for (int e = 1; e <= it->second; ++e) {
        env[a.var] = e;
        kids.push_back(translate_ast(*a.kids[0], I, atoms, env));
      }
      if (saved >= 0) env[a.var] = saved; else env.erase(a.var);
      return a.kind == FOKind::Forall ? big_and(std::move(kids)) : big_or(std::move(kids));
    }
  }
  throw DomainError("fo: bad node");
}

}  // namespace

F fo_translate(const FOSentence& s, const Interpretation& I, AtomTable& atoms) {
  std::vector<AtomName> names;
  grid_names(s.sig, I, names);
  std::sort(names.begin(), names.end());
  for (auto& n : names) atoms.add(std::move(n));
  std::map<std::string, int> env;
  return translate_ast(*s.root, I, atoms, env);
}

F fold_constants(const F& f) {
  auto is_true = [](const F& x) { return x->kind == Kind::True; };
  auto is_false = [](const F& x) { return x->kind == Kind::False; };
  std::function<F(const F&)> pos_fold = [&](const F& g) -> F {
    std::function<F(const F&)> neg_fold = [&](const F& h) -> F {
      switch (h->kind) {
        case Kind::True: return bot();
        case Kind::False: return top();
        case Kind::Atom:
        case Kind::ExtAtom: return mk_not(h);
        case Kind::Not: return pos_fold(h->kids[0]);
        case Kind::And: {
          F a = neg_fold(h->kids[0]), b = neg_fold(h->kids[1]);
          if (is_true(a) || is_true(b)) return top();
          if (is_false(a)) return b;
          if (is_false(b)) return a;
          return mk_or(a, b);
        }
        case Kind::Or: {
          F a = neg_fold(h->kids[0]), b = neg_fold(h->kids[1]);
          if (is_false(a) || is_false(b)) return bot();
          if (is_true(a)) return b;
          if (is_true(b)) return a;
          return mk_and(a, b);
        }
        case Kind::Imp: {
          F a = pos_fold(h->kids[0]), b = neg_fold(h->kids[1]);
          if (is_false(a) || is_false(b)) return bot();
          if (is_true(a)) return b;
          if (is_true(b)) return a;
          return mk_and(a, b);
        }
        case Kind::BigAnd:
        case Kind::BigOr: {
          bool is_conj = h->kind == Kind::BigAnd;  // negation flips it
          std::vector<F> kids;
          for (const F& k : h->kids) {
            F nk = neg_fold(k);
            if (is_conj) {  // building a big disjunction
              if (is_true(nk)) return top();
              if (!is_false(nk)) kids.push_back(nk);
            } else {
              if (is_false(nk)) return bot();
              if (!is_true(nk)) kids.push_back(nk);
            }
          }
          if (kids.empty()) return is_conj ? bot() : top();
          return is_conj ? big_or(std::move(kids)) : big_and(std::move(kids));
        }
        default: throw DomainError("fold: modal input");
      }
    };
    switch (g->kind) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom:
      case Kind::ExtAtom: return g;
      case Kind::Not: return neg_fold(g->kids[0]);
      case Kind::And: {
        F a = pos_fold(g->kids[0]), b = pos_fold(g->kids[1]);
        if (is_false(a) || is_false(b)) return bot();
        if (is_true(a)) return b;
        if (is_true(b)) return a;
        return mk_and(a, b);
      }
      case Kind::Or: {
        F a = pos_fold(g->kids[0]), b = pos_fold(g->kids[1]);
        if (is_true(a) || is_true(b)) return top();
        if (is_false(a)) return b;
        if (is_false(b)) return a;
        return mk_or(a, b);
      }
      case Kind::Imp: {
        F a = pos_fold(g->kids[0]);
        F b = pos_fold(g->kids[1]);
        if (is_false(a)) return top();
        if (is_true(b)) return top();
        if (is_true(a)) return b;
        if (is_false(b)) return neg_fold(g->kids[0]);
        return mk_imp(a, b);
      }
      case Kind::BigAnd: {
        std::vector<F> kids;
        for (const F& k : g->kids) {
          F nk = pos_fold(k);
          if (is_false(nk)) return bot();
          if (!is_true(nk)) kids.push_back(nk);
        }
        if (kids.empty()) return top();
        return big_and(std::move(kids));
      }
      case Kind::BigOr: {
        std::vector<F> kids;
        for (const F& k : g->kids) {
          F nk = pos_fold(k);
          if (is_true(nk)) return top();
          if (!is_false(nk)) kids.push_back(nk);
        }
        if (kids.empty()) return bot();
        return big_or(std::move(kids));
      }
      default: throw DomainError("fold: modal input");
    }
  };
  return pos_fold(f);
}

std::vector<F> fo_family(const FOSentence& s,
                         const std::map<std::string, std::function<int(int)>>& size_of,
                         int n_lo, int n_hi, bool fold, AtomTable& atoms) {
  std::vector<F> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    Interpretation I;
    for (const auto& sort : s.sig.sorts) {
      auto it = size_of.find(sort);
      if (it == size_of.end()) throw DomainError("fo family: no size polynomial for sort " + sort);
      I.domain_size[sort] = it->second(n);
    }
    F f = fo_translate(s, I, atoms);
    out.push_back(fold ? fold_constants(f) : f);
  }
  return out;
}

namespace {

bool holds_ast(const FOAst& a, const Interpretation& I, const FOExtension& ext,
               std::map<std::string, int>& env) {
  auto term_value = [&](const FOTerm& t) {
    if (!t.is_var) return t.element;
    return env.at(t.var);
  };
  switch (a.kind) {
    case FOKind::True: return true;
    case FOKind::False: return false;
    case FOKind::Eq: return term_value(a.args[0]) == term_value(a.args[1]);
    case FOKind::Rel: {
      std::vector<int> tuple;
      for (const auto& t : a.args) tuple.push_back(term_value(t));
      auto it = ext.find(a.rel);
      return it != ext.end() && it->second.count(tuple) > 0;
    }
    case FOKind::Not: return !holds_ast(*a.kids[0], I, ext, env);
    case FOKind::And: return holds_ast(*a.kids[0], I, ext, env) && holds_ast(*a.kids[1], I, ext, env);
    case FOKind::Or: return holds_ast(*a.kids[0], I, ext, env) || holds_ast(*a.kids[1], I, ext, env);
    case FOKind::Imp:
      return !holds_ast(*a.kids[0], I, ext, env) || holds_ast(*a.kids[1], I, ext, env);
    case FOKind::Forall:
    case FOKind::Exists: {
      int size = I.domain_size.at(a.sort);
      auto prev = env.find(a.var);
      int saved = prev == env.end() ? -1 : prev->second;
      bool all = true, any = false;
      for (int e = 1; e <= size; ++e) {
        env[a.var] = e;
        bool v = holds_ast(*a.kids[0], I, ext, env);
        all = all && v;
        any = any || v;
      }
      if (saved >= 0) env[a.var] = saved; else env.erase(a.var);
      return a.kind == FOKind::Forall ? all : any;
    }
  }
  throw DomainError("fo: bad node");
}

std::vector<std::vector<int>> rel_grid(const std::vector<std::string>& sorts,
                                       const Interpretation& I) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> sizes;
  for (const auto& s : sorts) sizes.push_back(I.domain_size.at(s));
  std::vector<int> tuple(sizes.size(), 1);
  if (sizes.empty()) return {{}};
  while (true) {
    tuples.push_back(tuple);
    size_t d = tuple.size();
    while (d > 0) {
      if (++tuple[d - 1] <= sizes[d - 1]) break;
      tuple[d - 1] = 1;
      --d;
    }
    if (d == 0) break;
  }
  return tuples;
}

}  // namespace

bool fo_holds(const FOSentence& s, const Interpretation& I, const FOExtension& ext) {
  std::map<std::string, int> env;
  return holds_ast(*s.root, I, ext, env);
}

std::vector<FOExtension> fo_all_extensions(const FOSignature& sig, const Interpretation& I,
                                           uint64_t cap) {
  std::vector<std::string> rels;
  std::vector<std::vector<std::vector<int>>> grids;
  uint64_t total = 1;
  for (const auto& [name, sorts] : sig.relations) {
    rels.push_back(name);
    grids.push_back(rel_grid(sorts, I));
    uint64_t cells = grids.back().size();
    if (cells >= 40 || (total << cells) < total)
      throw CapExceeded("fo: relation grid too large to enumerate");
    total <<= cells;
    if (total > cap) throw CapExceeded("fo: too many extensions to enumerate");
  }
  std::vector<FOExtension> out;
  out.reserve(total);
  for (uint64_t code = 0; code < total; ++code) {
    FOExtension ext;
    uint64_t rest = code;
    for (size_t r = 0; r < rels.size(); ++r) {
      auto& grid = grids[r];
      uint64_t bits = rest & ((1ull << grid.size()) - 1);
      rest >>= grid.size();
      auto& set = ext[rels[r]];
      for (size_t i = 0; i < grid.size(); ++i)
        if ((bits >> i) & 1u) set.insert(grid[i]);
    }
    out.push_back(std::move(ext));
  }
  return out;
}

Assignment fo_extension_assignment(const FOSignature& sig, const Interpretation& I,
                                   const FOExtension& ext, const AtomTable& atoms) {
  Assignment a;
  for (const auto& [name, sorts] : sig.relations) {
    auto it = ext.find(name);
    for (const auto& tuple : rel_grid(sorts, I)) {
      AtomId id = atoms.id_of(AtomName::indexed(name, tuple));
      a.set(id, it != ext.end() && it->second.count(tuple) > 0);
    }
  }
  return a;
}

namespace {

FOSentence make_example(const std::string& text) { return parse_fo(text); }

}  // namespace

FOSentence fo_example_functionality() {
  return make_example(
      "(fo (sorts sigma tau) (rel R sigma tau) (sentence"
      " (forall (x sigma) (forall (y1 tau) (forall (y2 tau)"
      " (imp (and (rel R x y1) (rel R x y2)) (= y1 y2)))))))");
}

FOSentence fo_example_injectivity() {
  return make_example(
      "(fo (sorts sigma tau) (rel R sigma tau) (sentence"
      " (forall (x1 sigma) (forall (x2 sigma) (forall (y tau)"
      " (imp (and (rel R x1 y) (rel R x2 y)) (= x1 x2)))))))");
}

FOSentence fo_example_totality() {
  return make_example(
      "(fo (sorts sigma tau) (rel R sigma tau) (sentence"
      " (forall (x sigma) (exists (y tau) (rel R x y)))))");
}

}  // namespace pc
