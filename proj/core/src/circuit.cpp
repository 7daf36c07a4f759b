#include "proofcomp/circuit.hpp"

#include <sstream>

namespace pc {

int Gate::arity(GateType t) {
  switch (t) {
    case GateType::Input:
    case GateType::True:
    case GateType::False: return 0;
    case GateType::Not:
    case GateType::Box: return 1;
    default: return 2;
  }
}

Circuit::Circuit(int n_inputs, std::vector<Gate> gates, std::vector<int> outputs)
    : n_inputs_(n_inputs), gates_(std::move(gates)), outputs_(std::move(outputs)) {
  validate();
}

void Circuit::validate() const {
  if (n_inputs_ < 0) throw DomainError("circuit: negative input arity");
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    int ar = Gate::arity(g.type);
    if (ar >= 1 && (g.a < 0 || g.a >= static_cast<int>(i)))
      throw DomainError("circuit: gate " + std::to_string(i) + " has bad predecessor");
    if (ar == 2 && (g.b < 0 || g.b >= static_cast<int>(i)))
      throw DomainError("circuit: gate " + std::to_string(i) + " has bad predecessor");
    if (g.type == GateType::Input && (g.input < 1 || g.input > n_inputs_))
      throw DomainError("circuit: gate " + std::to_string(i) + " reads input " +
                        std::to_string(g.input) + " outside arity " + std::to_string(n_inputs_));
  }
  if (outputs_.empty()) throw DomainError("circuit: no outputs");
  for (int o : outputs_)
    if (o < 0 || o >= static_cast<int>(gates_.size()))
      throw DomainError("circuit: output gate " + std::to_string(o) + " does not exist");
}

bool Circuit::is_monotone() const {
  for (const Gate& g : gates_)
    if (g.type == GateType::Not || g.type == GateType::Imp) return false;
  return true;
}

bool Circuit::has_box() const {
  for (const Gate& g : gates_)
    if (g.type == GateType::Box) return true;
  return false;
}

std::vector<uint64_t> Circuit::eval64(const std::vector<uint64_t>& input_lanes) const {
  if (input_lanes.size() != static_cast<size_t>(n_inputs_))
    throw DomainError("circuit eval: expected " + std::to_string(n_inputs_) + " inputs, got " +
                      std::to_string(input_lanes.size()));
  std::vector<uint64_t> val(gates_.size());
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.type) {
      case GateType::Input: val[i] = input_lanes[g.input - 1]; break;
      case GateType::True: val[i] = ~0ull; break;
      case GateType::False: val[i] = 0; break;
      case GateType::Not: val[i] = ~val[g.a]; break;
      case GateType::And: val[i] = val[g.a] & val[g.b]; break;
      case GateType::Or: val[i] = val[g.a] | val[g.b]; break;
      case GateType::Imp: val[i] = ~val[g.a] | val[g.b]; break;
      case GateType::Box: throw DomainError("circuit eval: box gate has no classical value");
    }
  }
  std::vector<uint64_t> out;
  out.reserve(outputs_.size());
  for (int o : outputs_) out.push_back(val[o]);
  return out;
}

std::vector<bool> Circuit::eval(const std::vector<bool>& input) const {
  std::vector<uint64_t> lanes(input.size());
  for (size_t i = 0; i < input.size(); ++i) lanes[i] = input[i] ? ~0ull : 0ull;
  std::vector<uint64_t> got = eval64(lanes);
  std::vector<bool> out(got.size());
  for (size_t i = 0; i < got.size(); ++i) out[i] = (got[i] & 1u) != 0;
  return out;
}

int64_t Circuit::unfold_size() const {
  constexpr int64_t kSat = INT64_MAX / 2;
  std::vector<int64_t> sz(gates_.size());
  auto sat_add = [&](int64_t x, int64_t y) { return (x > kSat - y) ? kSat : x + y; };
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (Gate::arity(g.type)) {
      case 0: sz[i] = 1; break;
      case 1: sz[i] = sat_add(1, sz[g.a]); break;
      default: sz[i] = sat_add(1, sat_add(sz[g.a], sz[g.b])); break;
    }
  }
  if (outputs_.size() != 1) throw DomainError("unfold: circuit must have a single output");
  return sz[outputs_[0]];
}

F Circuit::unfold(const std::vector<AtomId>& input_atoms) const {
  if (outputs_.size() != 1) throw DomainError("unfold: circuit must have a single output");
  if (unfold_size() > (1 << 26)) throw CapExceeded("unfold: formula would be too large");
  std::vector<F> val(gates_.size());
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.type) {
      case GateType::Input: {
        AtomId id = input_atoms.empty() ? static_cast<AtomId>(g.input - 1)
                                        : input_atoms.at(g.input - 1);
        val[i] = atom(id);
        break;
      }
      case GateType::True: val[i] = top(); break;
      case GateType::False: val[i] = bot(); break;
      case GateType::Not: val[i] = mk_not(val[g.a]); break;
      case GateType::And: val[i] = mk_and(val[g.a], val[g.b]); break;
      case GateType::Or: val[i] = mk_or(val[g.a], val[g.b]); break;
      case GateType::Imp: val[i] = mk_imp(val[g.a], val[g.b]); break;
      case GateType::Box: val[i] = mk_box(val[g.a]); break;
    }
  }
  return val[outputs_[0]];
}

Circuit Circuit::project_forgetful() const {
  std::vector<int> rep(gates_.size());
  std::vector<Gate> out;
  out.reserve(gates_.size());
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.type == GateType::Box) {
      rep[i] = rep[g.a];
      continue;
    }
    Gate ng = g;
    if (Gate::arity(g.type) >= 1) ng.a = rep[g.a];
    if (Gate::arity(g.type) == 2) ng.b = rep[g.b];
    rep[i] = static_cast<int>(out.size());
    out.push_back(ng);
  }
  std::vector<int> outs;
  outs.reserve(outputs_.size());
  for (int o : outputs_) outs.push_back(rep[o]);
  return Circuit(n_inputs_, std::move(out), std::move(outs));
}

Circuit Circuit::project_collapse() const {
  std::vector<Gate> out = gates_;
  for (Gate& g : out)
    if (g.type == GateType::Box) g = Gate{GateType::True, 0, -1, -1};
  return Circuit(n_inputs_, std::move(out), outputs_);
}

namespace {

const char* gate_name(GateType t) {
  switch (t) {
    case GateType::Input: return "INPUT";
    case GateType::True: return "TRUE";
    case GateType::False: return "FALSE";
    case GateType::Not: return "NOT";
    case GateType::And: return "AND";
    case GateType::Or: return "OR";
    case GateType::Imp: return "IMP";
    case GateType::Box: return "BOX";
  }
  return "?";
}

bool gate_type_of(const std::string& s, GateType& out) {
  if (s == "INPUT") out = GateType::Input;
  else if (s == "TRUE") out = GateType::True;
  else if (s == "FALSE") out = GateType::False;
  else if (s == "NOT") out = GateType::Not;
  else if (s == "AND") out = GateType::And;
  else if (s == "OR") out = GateType::Or;
  else if (s == "IMP") out = GateType::Imp;
  else if (s == "BOX") out = GateType::Box;
  else return false;
  return true;
}

}  // namespace

std::string Circuit::print() const {
  std::ostringstream os;
  os << "circuit " << n_inputs_ << "\n";
  for (size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    os << "g" << i << " " << gate_name(g.type);
    if (g.type == GateType::Input) os << " " << g.input;
    if (Gate::arity(g.type) >= 1) os << " " << g.a;
    if (Gate::arity(g.type) == 2) os << " " << g.b;
    os << "\n";
  }
  os << "outputs:";
  for (int o : outputs_) os << " " << o;
  os << "\n";
  return os.str();
}

Circuit Circuit::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n_inputs = -1;
  std::vector<Gate> gates;
  std::vector<int> outputs;
  bool saw_outputs = false;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "circuit") {
      if (!(ls >> n_inputs) || n_inputs < 0) throw ParseError("circuit: bad input arity", lineno);
      continue;
    }
    if (head == "outputs:") {
      int o;
      while (ls >> o) outputs.push_back(o);
      saw_outputs = true;
      continue;
    }
    if (head.size() < 2 || head[0] != 'g') throw ParseError("circuit: expected gate line", lineno);
    size_t used = 0;
    int id = std::stoi(head.substr(1), &used);
    if (used + 1 != head.size() || id != static_cast<int>(gates.size()))
      throw ParseError("circuit: gate ids must be dense and in order", lineno);
    std::string tname;
    if (!(ls >> tname)) throw ParseError("circuit: missing gate type", lineno);
    Gate g;
    if (!gate_type_of(tname, g.type)) throw ParseError("circuit: unknown gate type " + tname, lineno);
    if (g.type == GateType::Input) {
      if (!(ls >> g.input)) throw ParseError("circuit: input gate needs index", lineno);
    }
    if (Gate::arity(g.type) >= 1 && !(ls >> g.a))
      throw ParseError("circuit: missing predecessor", lineno);
    if (Gate::arity(g.type) == 2 && !(ls >> g.b))
      throw ParseError("circuit: missing predecessor", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("circuit: trailing tokens on gate line", lineno);
    gates.push_back(g);
  }
  if (n_inputs < 0) throw ParseError("circuit: missing 'circuit <n>' header");
  if (!saw_outputs) throw ParseError("circuit: missing outputs line");
  return Circuit(n_inputs, std::move(gates), std::move(outputs));
}

int CircuitBuilder::mk(GateType t, int input, int a, int b) {
  auto key = std::make_tuple(t, input, a, b);
  auto it = dedup_.find(key);
  if (it != dedup_.end()) return it->second;
  int ar = Gate::arity(t);
  if (ar >= 1 && (a < 0 || a >= static_cast<int>(gates_.size())))
    throw DomainError("builder: bad predecessor");
  if (ar == 2 && (b < 0 || b >= static_cast<int>(gates_.size())))
    throw DomainError("builder: bad predecessor");
  int id = static_cast<int>(gates_.size());
  gates_.push_back(Gate{t, input, a, b});
  dedup_.emplace(key, id);
  return id;
}

int CircuitBuilder::input(int index_1based) {
  if (index_1based < 1 || index_1based > n_inputs_)
    throw DomainError("builder: input index out of range");
  return mk(GateType::Input, index_1based, -1, -1);
}
int CircuitBuilder::constant(bool value) {
  return mk(value ? GateType::True : GateType::False, 0, -1, -1);
}
int CircuitBuilder::not_(int a) { return mk(GateType::Not, 0, a, -1); }
int CircuitBuilder::box_(int a) { return mk(GateType::Box, 0, a, -1); }
int CircuitBuilder::and_(int a, int b) { return mk(GateType::And, 0, a, b); }
int CircuitBuilder::or_(int a, int b) { return mk(GateType::Or, 0, a, b); }
int CircuitBuilder::imp_(int a, int b) { return mk(GateType::Imp, 0, a, b); }

int CircuitBuilder::formula(const F& f, const std::map<AtomId, int>& atom_to_input) {
  switch (f->kind) {
    case Kind::Atom: {
      auto it = atom_to_input.find(f->atom);
      if (it == atom_to_input.end())
        throw DomainError("builder: atom " + std::to_string(f->atom) + " has no input slot");
      return input(it->second);
    }
    case Kind::ExtAtom: throw DomainError("builder: extended atom; intern or substitute first");
    case Kind::True: return constant(true);
    case Kind::False: return constant(false);
    case Kind::Not: return not_(formula(f->kids[0], atom_to_input));
    case Kind::Box: return box_(formula(f->kids[0], atom_to_input));
    case Kind::And: return and_(formula(f->kids[0], atom_to_input), formula(f->kids[1], atom_to_input));
    case Kind::Or: return or_(formula(f->kids[0], atom_to_input), formula(f->kids[1], atom_to_input));
    case Kind::Imp: return imp_(formula(f->kids[0], atom_to_input), formula(f->kids[1], atom_to_input));
    case Kind::BigAnd: {
      int acc = formula(f->kids[0], atom_to_input);
      for (size_t i = 1; i < f->kids.size(); ++i) acc = and_(acc, formula(f->kids[i], atom_to_input));
      return acc;
    }
    case Kind::BigOr: {
      int acc = formula(f->kids[0], atom_to_input);
      for (size_t i = 1; i < f->kids.size(); ++i) acc = or_(acc, formula(f->kids[i], atom_to_input));
      return acc;
    }
  }
  throw DomainError("builder: bad node");
}

Circuit CircuitBuilder::build(std::vector<int> outputs) const {
  return Circuit(n_inputs_, gates_, std::move(outputs));
}

}  // namespace pc
