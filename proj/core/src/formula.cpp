#include "proofcomp/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "proofcomp/brute.hpp"

namespace pc {

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::shared_ptr<Formula> make_node(Kind k) {
  auto n = std::make_shared<Formula>();
  n->kind = k;
  return n;
}

void finish(std::shared_ptr<Formula>& n) {
  uint64_t h = static_cast<uint64_t>(n->kind) * 0x100000001b3ull;
  int64_t sz = 1;
  uint8_t feats = 0;
  switch (n->kind) {
    case Kind::Atom:
      h = mix(h, static_cast<uint64_t>(n->atom));
      break;
    case Kind::ExtAtom:
      h = mix(h, n->wrapped->hash);
      sz += n->wrapped->size;
      feats |= kFeatExt;
      break;
    case Kind::Not: feats |= kFeatNot; break;
    case Kind::Imp: feats |= kFeatImp; break;
    case Kind::Box: feats |= kFeatBox; break;
    case Kind::BigAnd:
    case Kind::BigOr: feats |= kFeatBig; break;
    case Kind::And:
    case Kind::Or: feats |= kFeatBin; break;
    default: break;
  }
  for (const F& k : n->kids) {
    h = mix(h, k->hash);
    sz += k->size;
    feats |= k->feats;
  }
  n->hash = h;
  n->size = sz;
  n->feats = feats;
}

}  // namespace

const std::vector<AtomId>& Formula::vars() const {
  std::call_once(vars_once_, [this] {
    std::vector<AtomId> out;
    if (kind == Kind::Atom) {
      out.push_back(atom);
    } else {
      for (const F& k : kids) {
        const auto& kv = k->vars();
        std::vector<AtomId> merged;
        merged.reserve(out.size() + kv.size());
        std::set_union(out.begin(), out.end(), kv.begin(), kv.end(), std::back_inserter(merged));
        out = std::move(merged);
      }
    }
    vars_ = std::move(out);
  });
  return vars_;
}

F atom(AtomId id) {
  if (id < 0) throw DomainError("atom ids must be nonnegative");
  auto n = make_node(Kind::Atom);
  n->atom = id;
  finish(n);
  return n;
}

F ext_atom(const F& wrapped) {
  auto n = make_node(Kind::ExtAtom);
  n->wrapped = wrapped;
  finish(n);
  return n;
}

F top() {
  static const F t = [] { auto n = make_node(Kind::True); finish(n); return F(n); }();
  return t;
}

F bot() {
  static const F b = [] { auto n = make_node(Kind::False); finish(n); return F(n); }();
  return b;
}

static F nary(Kind k, std::vector<F> kids) {
  auto n = make_node(k);
  n->kids = std::move(kids);
  finish(n);
  return n;
}

F mk_not(const F& a) { return nary(Kind::Not, {a}); }
F mk_and(const F& a, const F& b) { return nary(Kind::And, {a, b}); }
F mk_or(const F& a, const F& b) { return nary(Kind::Or, {a, b}); }
F mk_imp(const F& a, const F& b) { return nary(Kind::Imp, {a, b}); }
F mk_box(const F& a) { return nary(Kind::Box, {a}); }

F big_and(std::vector<F> kids) {
  if (kids.empty()) throw DomainError("big conjunction needs at least one child");
  return nary(Kind::BigAnd, std::move(kids));
}

F big_or(std::vector<F> kids) {
  if (kids.empty()) throw DomainError("big disjunction needs at least one child");
  return nary(Kind::BigOr, std::move(kids));
}

F and_all(const std::vector<F>& fs) {
  if (fs.empty()) return top();
  F acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_and(acc, fs[i]);
  return acc;
}

F or_all(const std::vector<F>& fs) {
  if (fs.empty()) return bot();
  F acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_or(acc, fs[i]);
  return acc;
}

bool equal(const F& a, const F& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case Kind::Atom: return a->atom == b->atom;
    case Kind::ExtAtom: return equal(a->wrapped, b->wrapped);
    default:
      if (a->kids.size() != b->kids.size()) return false;
      for (size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i])) return false;
      return true;
  }
}

bool in_language(const F& f, Language lang) {
  const uint8_t x = f->feats;
  switch (lang) {
    case Language::Lb:     return !(x & (kFeatImp | kFeatBox | kFeatBig | kFeatExt));
    case Language::LbU:    return !(x & (kFeatImp | kFeatBox | kFeatBin | kFeatExt));
    case Language::Lp:     return !(x & (kFeatNot | kFeatBox | kFeatBig | kFeatExt));
    case Language::LBox:   return !(x & (kFeatNot | kFeatBig | kFeatExt));
    case Language::LpExt:  return !(x & (kFeatNot | kFeatBox | kFeatBig));
    case Language::LBoxExt: return !(x & (kFeatNot | kFeatBig));
  }
  return false;
}

const char* language_name(Language lang) {
  switch (lang) {
    case Language::Lb: return "Lb";
    case Language::LbU: return "LbU";
    case Language::Lp: return "Lp";
    case Language::LBox: return "LBox";
    case Language::LpExt: return "Lp+";
    case Language::LBoxExt: return "LBox+";
  }
  return "?";
}

void Assignment::set(AtomId id, bool bit) {
  if (id < 0) throw DomainError("atom ids must be nonnegative");
  if (static_cast<size_t>(id) >= bits_.size()) bits_.resize(id + 1, -1);
  bits_[id] = bit ? 1 : 0;
}

bool Assignment::covers(AtomId id) const {
  return id >= 0 && static_cast<size_t>(id) < bits_.size() && bits_[id] >= 0;
}

bool Assignment::at(AtomId id) const {
  if (!covers(id)) throw DomainError("assignment does not cover atom " + std::to_string(id));
  return bits_[id] == 1;
}

Assignment Assignment::from_bits(const std::vector<AtomId>& vars, uint64_t mask) {
  Assignment a;
  for (size_t i = 0; i < vars.size(); ++i) a.set(vars[i], (mask >> i) & 1u);
  return a;
}

bool eval(const F& f, const Assignment& a) {
  switch (f->kind) {
    case Kind::Atom: return a.at(f->atom);
    case Kind::ExtAtom: throw DomainError("eval: extended atom encountered; intern it first");
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Not: return !eval(f->kids[0], a);
    case Kind::And: return eval(f->kids[0], a) && eval(f->kids[1], a);
    case Kind::Or: return eval(f->kids[0], a) || eval(f->kids[1], a);
    case Kind::Imp: return !eval(f->kids[0], a) || eval(f->kids[1], a);
    case Kind::Box: throw DomainError("eval: modal operator has no classical value");
    case Kind::BigAnd: {
      for (const F& k : f->kids) if (!eval(k, a)) return false;
      return true;
    }
    case Kind::BigOr: {
      for (const F& k : f->kids) if (eval(k, a)) return true;
      return false;
    }
  }
  throw DomainError("eval: bad node");
}

uint64_t eval64(const F& f, const std::unordered_map<const Formula*, uint64_t>& atom_lanes,
                std::unordered_map<const Formula*, uint64_t>& memo) {
  auto it = memo.find(f.get());
  if (it != memo.end()) return it->second;
  uint64_t v = 0;
  switch (f->kind) {
    case Kind::Atom:
    case Kind::ExtAtom: {
      auto a = atom_lanes.find(f.get());
      if (a == atom_lanes.end()) throw DomainError("eval64: atom lane missing");
      v = a->second;
      break;
    }
    case Kind::True: v = ~0ull; break;
    case Kind::False: v = 0; break;
    case Kind::Not: v = ~eval64(f->kids[0], atom_lanes, memo); break;
    case Kind::And: v = eval64(f->kids[0], atom_lanes, memo) & eval64(f->kids[1], atom_lanes, memo); break;
    case Kind::Or: v = eval64(f->kids[0], atom_lanes, memo) | eval64(f->kids[1], atom_lanes, memo); break;
    case Kind::Imp: v = ~eval64(f->kids[0], atom_lanes, memo) | eval64(f->kids[1], atom_lanes, memo); break;
    case Kind::Box: throw DomainError("eval64: modal operator has no classical value");
    case Kind::BigAnd: {
      v = ~0ull;
      for (const F& k : f->kids) v &= eval64(k, atom_lanes, memo);
      break;
    }
    case Kind::BigOr: {
      v = 0;
      for (const F& k : f->kids) v |= eval64(k, atom_lanes, memo);
      break;
    }
  }
  memo.emplace(f.get(), v);
  return v;
}

// Shared engine: lowest assignment index (over vars(f)) where f evaluates to
// `needle`, or nullopt.
static std::optional<uint64_t> find_value(const F& f, bool needle, const BruteOpts& opts) {
  if (has_modality(f)) throw DomainError("brute force: modal formula");
  if (has_ext_atoms(f)) throw DomainError("brute force: extended atoms must be interned first");
  const auto& vars = f->vars();
  return brute_find(vars.size(), opts, [&](uint64_t lo) -> uint64_t {
    // Evaluate 64 assignments at once: lane L encodes assignment lo + L.
    std::unordered_map<const Formula*, uint64_t> atom_lanes;
    std::unordered_map<const Formula*, uint64_t> memo;
    collect_atom_lanes(f, vars, lo, atom_lanes);
    uint64_t got = eval64(f, atom_lanes, memo);
    return needle ? got : ~got;
  });
}

bool is_valid(const F& f, const BruteOpts& opts) { return !find_value(f, false, opts).has_value(); }
bool is_satisfiable(const F& f, const BruteOpts& opts) { return find_value(f, true, opts).has_value(); }

std::optional<Assignment> find_falsifying(const F& f, const BruteOpts& opts) {
  auto idx = find_value(f, false, opts);
  if (!idx) return std::nullopt;
  return Assignment::from_bits(f->vars(), *idx);
}

std::optional<Assignment> find_satisfying(const F& f, const BruteOpts& opts) {
  auto idx = find_value(f, true, opts);
  if (!idx) return std::nullopt;
  return Assignment::from_bits(f->vars(), *idx);
}

// --- NNF ------------------------------------------------------------------

static F nnf_pos(const F& f);
static F nnf_neg(const F& f);

static F nnf_pos(const F& f) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::True:
    case Kind::False: return f;
    case Kind::Not: return nnf_neg(f->kids[0]);
    case Kind::And: return mk_and(nnf_pos(f->kids[0]), nnf_pos(f->kids[1]));
    case Kind::Or: return mk_or(nnf_pos(f->kids[0]), nnf_pos(f->kids[1]));
    case Kind::Imp: return mk_or(nnf_neg(f->kids[0]), nnf_pos(f->kids[1]));
    case Kind::BigAnd: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      for (const F& k : f->kids) ks.push_back(nnf_pos(k));
      return big_and(std::move(ks));
    }
    case Kind::BigOr: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      for (const F& k : f->kids) ks.push_back(nnf_pos(k));
      return big_or(std::move(ks));
    }
    default: throw DomainError("to_nnf: modal or extended input");
  }
}

static F nnf_neg(const F& f) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::True:
    case Kind::False: return mk_not(f);
    case Kind::Not: return nnf_pos(f->kids[0]);
    case Kind::And: return mk_or(nnf_neg(f->kids[0]), nnf_neg(f->kids[1]));
    case Kind::Or: return mk_and(nnf_neg(f->kids[0]), nnf_neg(f->kids[1]));
    case Kind::Imp: return mk_and(nnf_pos(f->kids[0]), nnf_neg(f->kids[1]));
    case Kind::BigAnd: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      for (const F& k : f->kids) ks.push_back(nnf_neg(k));
      return big_or(std::move(ks));
    }
    case Kind::BigOr: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      for (const F& k : f->kids) ks.push_back(nnf_neg(k));
      return big_and(std::move(ks));
    }
    default: throw DomainError("to_nnf: modal or extended input");
  }
}

F to_nnf(const F& f) {
  if (has_modality(f) || has_ext_atoms(f)) throw DomainError("to_nnf: modal or extended input");
  return nnf_pos(f);
}

static bool scan_negated_atoms(const F& f, const std::set<AtomId>& p) {
  if (f->kind == Kind::Not && f->kids[0]->kind == Kind::Atom)
    return p.count(f->kids[0]->atom) == 0;
  for (const F& k : f->kids)
    if (!scan_negated_atoms(k, p)) return false;
  return true;
}

bool is_monotone_in(const F& f, const std::set<AtomId>& p) {
  return scan_negated_atoms(to_nnf(f), p);
}

bool is_monotone(const F& f) { return !(f->feats & (kFeatNot | kFeatImp)); }

int depth(const F& f) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::ExtAtom:
    case Kind::True:
    case Kind::False: return 0;
    case Kind::Not: return depth(f->kids[0]);
    case Kind::And:
    case Kind::Or:
    case Kind::BigAnd:
    case Kind::BigOr: {
      int d = 0;
      for (const F& k : f->kids) d = std::max(d, depth(k));
      return 1 + d;
    }
    default: throw DomainError("depth: implication or modality outside LbU");
  }
}

F standard_substitute(const F& f) {
  switch (f->kind) {
    case Kind::ExtAtom: return standard_substitute(f->wrapped);
    case Kind::Atom:
    case Kind::True:
    case Kind::False: return f;
    default: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      bool changed = false;
      for (const F& k : f->kids) {
        F nk = standard_substitute(k);
        changed |= (nk.get() != k.get());
        ks.push_back(std::move(nk));
      }
      if (!changed) return f;
      return nary(f->kind, std::move(ks));
    }
  }
}

F substitute_atoms(const F& f, const std::unordered_map<AtomId, F>& sub) {
  switch (f->kind) {
    case Kind::Atom: {
      auto it = sub.find(f->atom);
      return it == sub.end() ? f : it->second;
    }
    case Kind::ExtAtom:
    case Kind::True:
    case Kind::False: return f;
    default: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      bool changed = false;
      for (const F& k : f->kids) {
        F nk = substitute_atoms(k, sub);
        changed |= (nk.get() != k.get());
        ks.push_back(std::move(nk));
      }
      if (!changed) return f;
      return nary(f->kind, std::move(ks));
    }
  }
}

// --- text format ------------------------------------------------------------

std::string print_formula(const F& f) {
  switch (f->kind) {
    case Kind::Atom: return "(atom " + std::to_string(f->atom) + ")";
    case Kind::ExtAtom: return "(ext " + print_formula(f->wrapped) + ")";
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Not: return "(not " + print_formula(f->kids[0]) + ")";
    case Kind::And: return "(and " + print_formula(f->kids[0]) + " " + print_formula(f->kids[1]) + ")";
    case Kind::Or: return "(or " + print_formula(f->kids[0]) + " " + print_formula(f->kids[1]) + ")";
    case Kind::Imp: return "(imp " + print_formula(f->kids[0]) + " " + print_formula(f->kids[1]) + ")";
    case Kind::Box: return "(box " + print_formula(f->kids[0]) + ")";
    case Kind::BigAnd:
    case Kind::BigOr: {
      std::string out = f->kind == Kind::BigAnd ? "(bigand" : "(bigor";
      for (const F& k : f->kids) out += " " + print_formula(k);
      return out + ")";
    }
  }
  throw DomainError("print_formula: bad node");
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string read_token(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' &&
         s[pos] != ')')
    ++pos;
  if (start == pos) throw ParseError("expected token", pos);
  return s.substr(start, pos - start);
}

}  // namespace

F parse_formula_at(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
  if (s[pos] != '(') {
    std::string tok = read_token(s, pos);
    if (tok == "true") return top();
    if (tok == "false") return bot();
    throw ParseError("unknown token '" + tok + "'", pos);
  }
  ++pos;  // consume '('
  std::string head = read_token(s, pos);
  auto close = [&]() {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
  };
  if (head == "atom") {
    std::string num = read_token(s, pos);
    size_t used = 0;
    long id = 0;
    try {
      id = std::stol(num, &used);
    } catch (...) {
      throw ParseError("bad atom id '" + num + "'", pos);
    }
    if (used != num.size() || id < 0) throw ParseError("bad atom id '" + num + "'", pos);
    close();
    return atom(static_cast<AtomId>(id));
  }
  auto unary = [&](auto mk) {
    F a = parse_formula_at(s, pos);
    close();
    return mk(a);
  };
  auto binary = [&](auto mk) {
    F a = parse_formula_at(s, pos);
    F b = parse_formula_at(s, pos);
    close();
    return mk(a, b);
  };
  if (head == "not") return unary(mk_not);
  if (head == "box") return unary(mk_box);
  if (head == "ext") return unary(ext_atom);
  if (head == "and") return binary(mk_and);
  if (head == "or") return binary(mk_or);
  if (head == "imp") return binary(mk_imp);
  if (head == "bigand" || head == "bigor") {
    std::vector<F> kids;
    while (true) {
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == ')') break;
      kids.push_back(parse_formula_at(s, pos));
    }
    close();
    if (kids.empty()) throw ParseError("empty big connective", pos);
    return head == "bigand" ? big_and(std::move(kids)) : big_or(std::move(kids));
  }
  throw ParseError("unknown connective '" + head + "'", pos);
}

F parse_formula(const std::string& text) {
  size_t pos = 0;
  F f = parse_formula_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after formula", pos);
  return f;
}

}  // namespace pc
