#include <algorithm>
#include <set>
#include <sstream>

#include "proofcomp/brute.hpp"
#include "proofcomp/sequents.hpp"

namespace pc {

bool Sequent::operator==(const Sequent& o) const {
  if (ante.size() != o.ante.size() || succ.size() != o.succ.size()) return false;
  for (size_t i = 0; i < ante.size(); ++i)
    if (!equal(ante[i], o.ante[i])) return false;
  for (size_t i = 0; i < succ.size(); ++i)
    if (!equal(succ[i], o.succ[i])) return false;
  return true;
}

std::vector<AtomId> sequent_vars(const Sequent& s) {
  std::vector<AtomId> out;
  for (const F& f : s.ante) {
    const auto& v = f->vars();
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const F& f : s.succ) {
    const auto& v = f->vars();
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int64_t sequent_symbols(const Sequent& s) {
  int64_t n = 0;
  for (const F& f : s.ante) n += f->size;
  for (const F& f : s.succ) n += f->size;
  return n;
}

bool sequent_valid(const Sequent& s, const BruteOpts& opts) {
  std::vector<AtomId> vars = sequent_vars(s);
  auto hit = brute_find(vars.size(), opts, [&](uint64_t lo) -> uint64_t {
    std::unordered_map<const Formula*, uint64_t> lanes, memo;
    for (const F& f : s.ante) collect_atom_lanes(f, vars, lo, lanes);
    for (const F& f : s.succ) collect_atom_lanes(f, vars, lo, lanes);
    uint64_t all_ante = ~0ull;
    for (const F& f : s.ante) all_ante &= eval64(f, lanes, memo);
    uint64_t any_succ = 0;
    for (const F& f : s.succ) any_succ |= eval64(f, lanes, memo);
    return all_ante & ~any_succ;  // counterexample lanes
  });
  return !hit.has_value();
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.ante.size(); ++i)
    out += (i ? " " : "") + print_formula(s.ante[i]);
  out += s.ante.empty() ? "=>" : " =>";
  for (const F& f : s.succ) out += " " + print_formula(f);
  return out;
}

// --- calculus table -------------------------------------------------------------

std::string Calculus::name() const {
  std::string base;
  switch (id) {
    case CalculusId::LK: base = "lk"; break;
    case CalculusId::LKn: base = "lkn"; break;
    case CalculusId::LKd: base = "lkd:" + std::to_string(depth_cap); break;
    case CalculusId::LJ: base = "lj"; break;
    case CalculusId::K: base = "k"; break;
    case CalculusId::D: base = "d"; break;
    case CalculusId::KT: base = "kt"; break;
    case CalculusId::K4: base = "k4"; break;
    case CalculusId::KD4: base = "kd4"; break;
    case CalculusId::S4: base = "s4"; break;
    case CalculusId::GL: base = "gl"; break;
  }
  return cut_free ? base + "-" : base;
}

Calculus Calculus::parse(const std::string& text) {
  Calculus c;
  std::string s = text;
  if (!s.empty() && s.back() == '-') {
    c.cut_free = true;
    s.pop_back();
  }
  if (s.rfind("lkd:", 0) == 0) {
    c.id = CalculusId::LKd;
    try {
      c.depth_cap = std::stoi(s.substr(4));
    } catch (...) {
      throw ParseError("bad depth cap in calculus '" + text + "'");
    }
    if (c.depth_cap < 0) throw ParseError("negative depth cap");
    return c;
  }
  if (s == "lk") c.id = CalculusId::LK;
  else if (s == "lkn") c.id = CalculusId::LKn;
  else if (s == "lj") c.id = CalculusId::LJ;
  else if (s == "k") c.id = CalculusId::K;
  else if (s == "d") c.id = CalculusId::D;
  else if (s == "kt") c.id = CalculusId::KT;
  else if (s == "k4") c.id = CalculusId::K4;
  else if (s == "kd4") c.id = CalculusId::KD4;
  else if (s == "s4") c.id = CalculusId::S4;
  else if (s == "gl") c.id = CalculusId::GL;
  else throw ParseError("unknown calculus '" + text + "'");
  return c;
}

bool Calculus::modal() const {
  switch (id) {
    case CalculusId::K:
    case CalculusId::D:
    case CalculusId::KT:
    case CalculusId::K4:
    case CalculusId::KD4:
    case CalculusId::S4:
    case CalculusId::GL: return true;
    default: return false;
  }
}

Language Calculus::language() const {
  switch (id) {
    case CalculusId::LKn: return Language::Lb;
    case CalculusId::LKd: return Language::LbU;
    default: return modal() ? Language::LBox : Language::Lp;
  }
}

// --- rule table ------------------------------------------------------------------

namespace {

struct RuleInfo {
  const char* name;
  int premises;  // -1: depends on conclusion (big rules)
  bool pos;
  bool arg;
};

const RuleInfo kRules[] = {
    {"ax", 0, false, false},      {"ax-bot", 0, false, false}, {"ax-top", 0, false, false},
    {"ax-pair-l", 0, false, false}, {"ax-pair-r", 0, false, false},
    {"ax-ntop", 0, false, false}, {"ax-nbot", 0, false, false},
    {"le", 1, true, false},       {"re", 1, true, false},      {"cut", 2, false, false},
    {"lw", 1, true, false},       {"rw", 1, true, false},      {"lc", 1, true, false},
    {"rc", 1, true, false},
    {"land1", 1, true, false},    {"land2", 1, true, false},   {"rand", 2, true, false},
    {"lor", 2, true, false},      {"ror1", 1, true, false},    {"ror2", 1, true, false},
    {"limp", 2, true, false},     {"rimp", 1, true, false},    {"lneg", 1, true, false},
    {"rneg", 1, true, false},
    {"lband", 1, true, true},     {"rband", -1, true, false},  {"lbor", -1, true, false},
    {"rbor", 1, true, true},
    {"k", 1, false, false},       {"d", 1, false, false},      {"k4", 1, false, false},
    {"kd4", 1, false, false},     {"ls4", 1, true, false},     {"rs4", 1, false, false},
    {"gl", 1, false, false},
};

const RuleInfo& info(RuleId r) { return kRules[static_cast<size_t>(r)]; }

bool is_axiom(RuleId r) { return static_cast<size_t>(r) <= static_cast<size_t>(RuleId::AxNBot); }

bool rule_in_calculus(RuleId r, const Calculus& c) {
  const bool lk_core = [&] {
    switch (r) {
      case RuleId::AxId:
      case RuleId::AxBot:
      case RuleId::AxTop:
      case RuleId::ExL:
      case RuleId::ExR:
      case RuleId::WkL:
      case RuleId::WkR:
      case RuleId::CtrL:
      case RuleId::CtrR: return true;
      case RuleId::Cut: return !c.cut_free;
      default: return false;
    }
  }();
  if (lk_core) return true;
  const bool binary_logic = r == RuleId::AndL1 || r == RuleId::AndL2 || r == RuleId::AndR ||
                            r == RuleId::OrL || r == RuleId::OrR1 || r == RuleId::OrR2;
  const bool imp_rules = r == RuleId::ImpL || r == RuleId::ImpR;
  switch (c.id) {
    case CalculusId::LK:
    case CalculusId::LJ: return binary_logic || imp_rules;
    case CalculusId::LKn:
      return binary_logic || r == RuleId::AxPairL || r == RuleId::AxPairR ||
             r == RuleId::AxNTop || r == RuleId::AxNBot;
    case CalculusId::LKd:
      return r == RuleId::BigAndL || r == RuleId::BigAndR || r == RuleId::BigOrL ||
             r == RuleId::BigOrR || r == RuleId::NegL || r == RuleId::NegR;
    case CalculusId::K: return binary_logic || imp_rules || r == RuleId::K;
    case CalculusId::D: return binary_logic || imp_rules || r == RuleId::D;
    case CalculusId::KT:
      return binary_logic || imp_rules || r == RuleId::K || r == RuleId::S4L;
    case CalculusId::K4: return binary_logic || imp_rules || r == RuleId::K4;
    case CalculusId::KD4: return binary_logic || imp_rules || r == RuleId::KD4;
    case CalculusId::S4:
      return binary_logic || imp_rules || r == RuleId::S4L || r == RuleId::S4R;
    case CalculusId::GL: return binary_logic || imp_rules || r == RuleId::GL;
  }
  return false;
}

bool is_literal(const F& f) {
  return f->kind == Kind::Atom || (f->kind == Kind::Not && f->kids[0]->kind == Kind::Atom);
}

std::vector<F> erase_at(const std::vector<F>& v, size_t i) {
  std::vector<F> out(v);
  out.erase(out.begin() + i);
  return out;
}

std::vector<F> replace_at(const std::vector<F>& v, size_t i, const F& f) {
  std::vector<F> out(v);
  out[i] = f;
  return out;
}

std::vector<F> insert_at(const std::vector<F>& v, size_t i, const F& f) {
  std::vector<F> out(v);
  out.insert(out.begin() + i, f);
  return out;
}

std::vector<F> append(std::vector<F> v, const F& f) {
  v.push_back(f);
  return v;
}

std::vector<F> prepend(const F& f, const std::vector<F>& v) {
  std::vector<F> out;
  out.reserve(v.size() + 1);
  out.push_back(f);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool vec_equal(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

// All formulas boxed; fills the unboxed bodies.
bool all_boxed(const std::vector<F>& v, std::vector<F>& bodies) {
  bodies.clear();
  for (const F& f : v) {
    if (f->kind != Kind::Box) return false;
    bodies.push_back(f->kids[0]);
  }
  return true;
}

struct Checker {
  const Calculus calc;
  std::string error;
  const ProofNode* bad = nullptr;
  int64_t symbols = 0;
  int64_t nodes = 0;
  int preorder = 0;

  bool fail(const ProofNode& n, const std::string& why) {
    if (!bad) {
      bad = &n;
      error = why;
    }
    return false;
  }

  bool check_formula_ok(const ProofNode& n, const F& f) {
    if (!in_language(f, calc.language()))
      return fail(n, "formula " + print_formula(f) + " outside language " +
                         language_name(calc.language()));
    if (calc.id == CalculusId::LKd && depth(f) > calc.depth_cap)
      return fail(n, "formula depth exceeds cap " + std::to_string(calc.depth_cap));
    return true;
  }

  bool check_one(const ProofNode& n) {
    ++nodes;
    ++preorder;
    symbols += sequent_symbols(n.seq);
    for (const F& f : n.seq.ante)
      if (!check_formula_ok(n, f)) return false;
    for (const F& f : n.seq.succ)
      if (!check_formula_ok(n, f)) return false;
    if (calc.single_conclusion() && n.seq.succ.size() > 1)
      return fail(n, "sequent is not single-conclusion");
    if (!rule_in_calculus(n.rule, calc))
      return fail(n, std::string("rule ") + rule_name(n.rule) + " is not part of calculus " +
                         calc.name());
    int want = rule_premises(n.rule, n.seq, n.pos);
    if (want < 0) return fail(n, "rule does not apply to this conclusion");
    if (static_cast<int>(n.kids.size()) != want)
      return fail(n, std::string("rule ") + rule_name(n.rule) + " expects " +
                         std::to_string(want) + " premises, got " + std::to_string(n.kids.size()));
    return check_instance(n);
  }

  // Preorder walk with an explicit stack; simulated proofs can be deep.
  bool check(const ProofNode& root) {
    std::vector<const ProofNode*> stack{&root};
    while (!stack.empty()) {
      const ProofNode* n = stack.back();
      stack.pop_back();
      if (!check_one(*n)) return false;
      for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) stack.push_back(it->get());
    }
    return true;
  }

  bool expect_premise(const ProofNode& n, size_t which, const Sequent& want) {
    if (!(n.kids[which]->seq == want))
      return fail(n, "premise " + std::to_string(which + 1) + " must be '" + print_sequent(want) +
                         "', got '" + print_sequent(n.kids[which]->seq) + "'");
    return true;
  }

  bool need_ante(const ProofNode& n, Kind k, const char* what) {
    if (n.pos < 0 || n.pos >= static_cast<int>(n.seq.ante.size()))
      return fail(n, "principal position out of range");
    if (n.seq.ante[n.pos]->kind != k) return fail(n, std::string("principal formula is not ") + what);
    return true;
  }

  bool need_succ(const ProofNode& n, Kind k, const char* what) {
    if (n.pos < 0 || n.pos >= static_cast<int>(n.seq.succ.size()))
      return fail(n, "principal position out of range");
    if (n.seq.succ[n.pos]->kind != k) return fail(n, std::string("principal formula is not ") + what);
    return true;
  }

  bool check_instance(const ProofNode& n) {
    const Sequent& s = n.seq;
    switch (n.rule) {
      // ---- axioms ----
      case RuleId::AxId: {
        if (s.ante.size() != 1 || s.succ.size() != 1 || !equal(s.ante[0], s.succ[0]))
          return fail(n, "identity axiom must be phi => phi");
        if (calc.id == CalculusId::LKn && !is_literal(s.ante[0]))
          return fail(n, "identity axiom in lkn is restricted to literals");
        return true;
      }
      case RuleId::AxBot:
        if (!(s.succ.empty() && s.ante.size() == 1 && s.ante[0]->kind == Kind::False))
          return fail(n, "axiom must be false =>");
        return true;
      case RuleId::AxTop:
        if (!(s.ante.empty() && s.succ.size() == 1 && s.succ[0]->kind == Kind::True))
          return fail(n, "axiom must be => true");
        return true;
      case RuleId::AxPairL: {
        if (!(s.succ.empty() && s.ante.size() == 2 && s.ante[0]->kind == Kind::Atom &&
              s.ante[1]->kind == Kind::Not && equal(s.ante[1]->kids[0], s.ante[0])))
          return fail(n, "axiom must be p, (not p) =>");
        return true;
      }
      case RuleId::AxPairR: {
        if (!(s.ante.empty() && s.succ.size() == 2 && s.succ[0]->kind == Kind::Atom &&
              s.succ[1]->kind == Kind::Not && equal(s.succ[1]->kids[0], s.succ[0])))
          return fail(n, "axiom must be => p, (not p)");
        return true;
      }
      case RuleId::AxNTop:
        if (!(s.succ.empty() && s.ante.size() == 1 && s.ante[0]->kind == Kind::Not &&
              s.ante[0]->kids[0]->kind == Kind::True))
          return fail(n, "axiom must be (not true) =>");
        return true;
      case RuleId::AxNBot:
        if (!(s.ante.empty() && s.succ.size() == 1 && s.succ[0]->kind == Kind::Not &&
              s.succ[0]->kids[0]->kind == Kind::False))
          return fail(n, "axiom must be => (not false)");
        return true;

      // ---- structural ----
      case RuleId::ExL: {
        if (n.pos < 0 || n.pos + 1 >= static_cast<int>(s.ante.size()))
          return fail(n, "exchange position out of range");
        Sequent want{replace_at(replace_at(s.ante, n.pos, s.ante[n.pos + 1]), n.pos + 1,
                                s.ante[n.pos]),
                     s.succ};
        return expect_premise(n, 0, want);
      }
      case RuleId::ExR: {
        if (n.pos < 0 || n.pos + 1 >= static_cast<int>(s.succ.size()))
          return fail(n, "exchange position out of range");
        Sequent want{s.ante, replace_at(replace_at(s.succ, n.pos, s.succ[n.pos + 1]), n.pos + 1,
                                        s.succ[n.pos])};
        return expect_premise(n, 0, want);
      }
      case RuleId::Cut: {
        if (n.kids[0]->seq.succ.empty()) return fail(n, "left cut premise has empty succedent");
        F phi = n.kids[0]->seq.succ[0];
        Sequent left{s.ante, calc.single_conclusion() ? std::vector<F>{phi} : prepend(phi, s.succ)};
        Sequent right{append(s.ante, phi), s.succ};
        return expect_premise(n, 0, left) && expect_premise(n, 1, right);
      }
      case RuleId::WkL: {
        if (n.pos < 0 || n.pos >= static_cast<int>(s.ante.size()))
          return fail(n, "weakening position out of range");
        return expect_premise(n, 0, Sequent{erase_at(s.ante, n.pos), s.succ});
      }
      case RuleId::WkR: {
        if (n.pos < 0 || n.pos >= static_cast<int>(s.succ.size()))
          return fail(n, "weakening position out of range");
        return expect_premise(n, 0, Sequent{s.ante, erase_at(s.succ, n.pos)});
      }
      case RuleId::CtrL: {
        if (n.pos < 0 || n.pos >= static_cast<int>(s.ante.size()))
          return fail(n, "contraction position out of range");
        return expect_premise(n, 0, Sequent{insert_at(s.ante, n.pos, s.ante[n.pos]), s.succ});
      }
      case RuleId::CtrR: {
        if (n.pos < 0 || n.pos >= static_cast<int>(s.succ.size()))
          return fail(n, "contraction position out of range");
        return expect_premise(n, 0, Sequent{s.ante, insert_at(s.succ, n.pos, s.succ[n.pos])});
      }

      // ---- binary connectives ----
      case RuleId::AndL1: {
        if (!need_ante(n, Kind::And, "a conjunction")) return false;
        return expect_premise(
            n, 0, Sequent{replace_at(s.ante, n.pos, s.ante[n.pos]->kids[0]), s.succ});
      }
      case RuleId::AndL2: {
        if (!need_ante(n, Kind::And, "a conjunction")) return false;
        return expect_premise(
            n, 0, Sequent{replace_at(s.ante, n.pos, s.ante[n.pos]->kids[1]), s.succ});
      }
      case RuleId::AndR: {
        if (!need_succ(n, Kind::And, "a conjunction")) return false;
        const F& f = s.succ[n.pos];
        return expect_premise(n, 0, Sequent{s.ante, replace_at(s.succ, n.pos, f->kids[0])}) &&
               expect_premise(n, 1, Sequent{s.ante, replace_at(s.succ, n.pos, f->kids[1])});
      }
      case RuleId::OrL: {
        if (!need_ante(n, Kind::Or, "a disjunction")) return false;
        const F& f = s.ante[n.pos];
        return expect_premise(n, 0, Sequent{replace_at(s.ante, n.pos, f->kids[0]), s.succ}) &&
               expect_premise(n, 1, Sequent{replace_at(s.ante, n.pos, f->kids[1]), s.succ});
      }
      case RuleId::OrR1: {
        if (!need_succ(n, Kind::Or, "a disjunction")) return false;
        return expect_premise(
            n, 0, Sequent{s.ante, replace_at(s.succ, n.pos, s.succ[n.pos]->kids[0])});
      }
      case RuleId::OrR2: {
        if (!need_succ(n, Kind::Or, "a disjunction")) return false;
        return expect_premise(
            n, 0, Sequent{s.ante, replace_at(s.succ, n.pos, s.succ[n.pos]->kids[1])});
      }
      case RuleId::ImpL: {
        if (!need_ante(n, Kind::Imp, "an implication")) return false;
        const F& f = s.ante[n.pos];
        Sequent left{erase_at(s.ante, n.pos), calc.single_conclusion()
                                                  ? std::vector<F>{f->kids[0]}
                                                  : prepend(f->kids[0], s.succ)};
        Sequent right{replace_at(s.ante, n.pos, f->kids[1]), s.succ};
        return expect_premise(n, 0, left) && expect_premise(n, 1, right);
      }
      case RuleId::ImpR: {
        if (!need_succ(n, Kind::Imp, "an implication")) return false;
        const F& f = s.succ[n.pos];
        return expect_premise(
            n, 0, Sequent{append(s.ante, f->kids[0]), replace_at(s.succ, n.pos, f->kids[1])});
      }
      case RuleId::NegL: {
        if (!need_ante(n, Kind::Not, "a negation")) return false;
        return expect_premise(
            n, 0, Sequent{erase_at(s.ante, n.pos), prepend(s.ante[n.pos]->kids[0], s.succ)});
      }
      case RuleId::NegR: {
        if (!need_succ(n, Kind::Not, "a negation")) return false;
        return expect_premise(
            n, 0, Sequent{append(s.ante, s.succ[n.pos]->kids[0]), erase_at(s.succ, n.pos)});
      }

      // ---- unbounded arity ----
      case RuleId::BigAndL: {
        if (!need_ante(n, Kind::BigAnd, "a big conjunction")) return false;
        const F& f = s.ante[n.pos];
        if (n.arg < 1 || n.arg > static_cast<int>(f->kids.size()))
          return fail(n, "child selector out of range");
        return expect_premise(
            n, 0, Sequent{replace_at(s.ante, n.pos, f->kids[n.arg - 1]), s.succ});
      }
      case RuleId::BigOrR: {
        if (!need_succ(n, Kind::BigOr, "a big disjunction")) return false;
        const F& f = s.succ[n.pos];
        if (n.arg < 1 || n.arg > static_cast<int>(f->kids.size()))
          return fail(n, "child selector out of range");
        return expect_premise(
            n, 0, Sequent{s.ante, replace_at(s.succ, n.pos, f->kids[n.arg - 1])});
      }
      case RuleId::BigAndR: {
        if (!need_succ(n, Kind::BigAnd, "a big conjunction")) return false;
        const F& f = s.succ[n.pos];
        for (size_t j = 0; j < f->kids.size(); ++j)
          if (!expect_premise(n, j, Sequent{s.ante, replace_at(s.succ, n.pos, f->kids[j])}))
            return false;
        return true;
      }
      case RuleId::BigOrL: {
        if (!need_ante(n, Kind::BigOr, "a big disjunction")) return false;
        const F& f = s.ante[n.pos];
        for (size_t j = 0; j < f->kids.size(); ++j)
          if (!expect_premise(n, j, Sequent{replace_at(s.ante, n.pos, f->kids[j]), s.succ}))
            return false;
        return true;
      }

      // ---- modal rules ----
      case RuleId::K:
      case RuleId::K4:
      case RuleId::S4R:
      case RuleId::GL: {
        std::vector<F> bodies;
        if (!all_boxed(s.ante, bodies)) return fail(n, "antecedent must be fully boxed");
        if (s.succ.size() != 1 || s.succ[0]->kind != Kind::Box)
          return fail(n, "succedent must be a single boxed formula");
        F phi = s.succ[0]->kids[0];
        Sequent want;
        want.succ = {phi};
        switch (n.rule) {
          case RuleId::K: want.ante = bodies; break;
          case RuleId::S4R: want.ante = s.ante; break;
          case RuleId::K4: {
            want.ante = s.ante;
            want.ante.insert(want.ante.end(), bodies.begin(), bodies.end());
            break;
          }
          case RuleId::GL: {
            want.ante = s.ante;
            want.ante.insert(want.ante.end(), bodies.begin(), bodies.end());
            want.ante.push_back(s.succ[0]);
            break;
          }
          default: break;
        }
        return expect_premise(n, 0, want);
      }
      case RuleId::D:
      case RuleId::KD4: {
        std::vector<F> bodies, sbodies;
        if (!all_boxed(s.ante, bodies)) return fail(n, "antecedent must be fully boxed");
        if (s.succ.size() > 1) return fail(n, "rule allows at most one succedent formula");
        if (!all_boxed(s.succ, sbodies)) return fail(n, "succedent must be boxed");
        Sequent want;
        want.succ = sbodies;
        if (n.rule == RuleId::D) {
          want.ante = bodies;
        } else {
          want.ante = s.ante;
          want.ante.insert(want.ante.end(), bodies.begin(), bodies.end());
        }
        return expect_premise(n, 0, want);
      }
      case RuleId::S4L: {
        if (!need_ante(n, Kind::Box, "a boxed formula")) return false;
        return expect_premise(
            n, 0, Sequent{replace_at(s.ante, n.pos, s.ante[n.pos]->kids[0]), s.succ});
      }
    }
    return fail(n, "unhandled rule");
  }
};

int preorder_id_of(const ProofNode& root, const ProofNode* target) {
  int next = 1;
  std::vector<const ProofNode*> stack{&root};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    int id = next++;
    if (n == target) return id;
    for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) stack.push_back(it->get());
  }
  return -1;
}

}  // namespace

ProofNode::~ProofNode() {
  std::vector<std::unique_ptr<ProofNode>> pending;
  for (auto& k : kids) pending.push_back(std::move(k));
  while (!pending.empty()) {
    auto n = std::move(pending.back());
    pending.pop_back();
    for (auto& k : n->kids) pending.push_back(std::move(k));
  }
}

const char* rule_name(RuleId r) { return info(r).name; }

bool rule_from_name(const std::string& s, RuleId& out) {
  for (size_t i = 0; i < sizeof(kRules) / sizeof(kRules[0]); ++i) {
    if (s == kRules[i].name) {
      out = static_cast<RuleId>(i);
      return true;
    }
  }
  return false;
}

int rule_premises(RuleId r, const Sequent& conclusion, int pos) {
  int want = info(r).premises;
  if (want >= 0) return want;
  // big two-sided rules: one premise per child of the principal formula
  const std::vector<F>* side =
      (r == RuleId::BigAndR) ? &conclusion.succ : (r == RuleId::BigOrL) ? &conclusion.ante : nullptr;
  if (!side || pos < 0 || pos >= static_cast<int>(side->size())) return -1;
  const F& f = (*side)[pos];
  if (r == RuleId::BigAndR && f->kind != Kind::BigAnd) return -1;
  if (r == RuleId::BigOrL && f->kind != Kind::BigOr) return -1;
  return static_cast<int>(f->kids.size());
}

bool rule_takes_pos(RuleId r) { return info(r).pos; }
bool rule_takes_arg(RuleId r) { return info(r).arg; }

std::unique_ptr<ProofNode> clone_node(const ProofNode& n) {
  auto out = std::make_unique<ProofNode>();
  out->seq = n.seq;
  out->rule = n.rule;
  out->pos = n.pos;
  out->arg = n.arg;
  out->script_id = n.script_id;
  for (const auto& k : n.kids) out->kids.push_back(clone_node(*k));
  return out;
}

int64_t proof_symbols(const ProofNode& n) {
  int64_t total = 0;
  std::vector<const ProofNode*> stack{&n};
  while (!stack.empty()) {
    const ProofNode* cur = stack.back();
    stack.pop_back();
    total += sequent_symbols(cur->seq);
    for (const auto& k : cur->kids) stack.push_back(k.get());
  }
  return total;
}

KernelVerdict check_sequent_proof(const SequentProof& p) {
  KernelVerdict v;
  if (!p.root) {
    v.reason = "empty proof";
    return v;
  }
  Checker c{p.calc};
  bool ok = c.check(*p.root);
  v.proof_size = c.symbols;
  v.node_count = c.nodes;
  v.accepted = ok && !c.bad;
  if (!v.accepted && c.bad) {
    v.reason = c.error;
    v.rule = rule_name(c.bad->rule);
    v.node_id = c.bad->script_id >= 0 ? c.bad->script_id : preorder_id_of(*p.root, c.bad);
  }
  return v;
}

}  // namespace pc
