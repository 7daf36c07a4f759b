#include <map>
#include <sstream>

#include "proofcomp/sequents.hpp"

namespace pc {

namespace {

// Post-order, with an explicit stack so deep proofs print fine.
int print_nodes(std::ostream& os, const ProofNode& root, int& next) {
  struct Frame {
    const ProofNode* node;
    size_t kid = 0;
    std::vector<int> kid_ids;
  };
  std::vector<Frame> stack{{&root}};
  int last = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.kid < f.node->kids.size()) {
      stack.push_back(Frame{f.node->kids[f.kid++].get()});
      continue;
    }
    int id = next++;
    os << "node " << id << " " << rule_name(f.node->rule);
    if (rule_takes_pos(f.node->rule)) os << " " << f.node->pos;
    if (rule_takes_arg(f.node->rule)) os << " " << f.node->arg;
    if (!f.kid_ids.empty()) {
      os << " from";
      for (int k : f.kid_ids) os << " " << k;
    }
    os << " : " << print_sequent(f.node->seq) << "\n";
    last = id;
    stack.pop_back();
    if (!stack.empty()) stack.back().kid_ids.push_back(id);
  }
  return last;
}

bool at_arrow(const std::string& s, size_t pos) {
  return pos + 1 < s.size() && s[pos] == '=' && s[pos + 1] == '>';
}

void skip_spaces(const std::string& s, size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

}  // namespace

std::string print_proof(const SequentProof& p) {
  std::ostringstream os;
  os << "calculus " << p.calc.name() << "\n";
  int next = 1;
  std::vector<int> ids;
  if (p.root) print_node(os, *p.root, next, ids);
  os << "root " << (ids.empty() ? 0 : ids.back()) << "\n";
  return os.str();
}

SequentProof parse_proof(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  SequentProof proof;
  bool saw_calculus = false;
  std::map<int, std::unique_ptr<ProofNode>> nodes;
  std::map<int, std::vector<int>> pending_kids;
  int root_id = -1;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head[0] == '#') continue;
    if (head == "calculus") {
      std::string name;
      if (!(ls >> name)) throw ParseError("proof: missing calculus name", lineno);
      proof.calc = Calculus::parse(name);
      saw_calculus = true;
      continue;
    }
    if (head == "root") {
      if (!(ls >> root_id)) throw ParseError("proof: bad root line", lineno);
      continue;
    }
    if (head != "node") throw ParseError("proof: expected node/root/calculus line", lineno);
    int id;
    std::string rname;
    if (!(ls >> id >> rname)) throw ParseError("proof: bad node header", lineno);
    if (nodes.count(id)) throw ParseError("proof: duplicate node id", lineno);
    auto node = std::make_unique<ProofNode>();
    node->script_id = id;
    if (!rule_from_name(rname, node->rule))
      throw ParseError("proof: unknown rule '" + rname + "'", lineno);
    if (rule_takes_pos(node->rule) && !(ls >> node->pos))
      throw ParseError("proof: rule " + rname + " needs a position", lineno);
    if (rule_takes_arg(node->rule) && !(ls >> node->arg))
      throw ParseError("proof: rule " + rname + " needs a child selector", lineno);
    std::string tok;
    std::vector<int> kids;
    bool seen_colon = false;
    while (ls >> tok) {
      if (tok == "from") {
        int k;
        while (ls >> k) kids.push_back(k);
        ls.clear();
        if (!(ls >> tok)) break;
      }
      if (tok == ":") {
        seen_colon = true;
        break;
      }
      throw ParseError("proof: unexpected token '" + tok + "'", lineno);
    }
    if (!seen_colon) throw ParseError("proof: node line missing ': <sequent>'", lineno);
    std::string rest;
    std::getline(ls, rest);
    size_t pos = 0;
    bool in_succ = false;
    while (true) {
      skip_spaces(rest, pos);
      if (pos >= rest.size()) break;
      if (at_arrow(rest, pos)) {
        if (in_succ) throw ParseError("proof: two => in sequent", lineno);
        in_succ = true;
        pos += 2;
        continue;
      }
      F f = parse_formula_at(rest, pos);
      (in_succ ? node->seq.succ : node->seq.ante).push_back(f);
    }
    if (!in_succ) throw ParseError("proof: sequent missing =>", lineno);
    pending_kids[id] = std::move(kids);
    nodes[id] = std::move(node);
  }
  if (!saw_calculus) throw ParseError("proof: missing calculus line");
  if (root_id < 0) throw ParseError("proof: missing root line");
  // Link children bottom-up; each node may be consumed at most once (trees,
  // not dags). Iterative to keep deep proofs off the call stack.
  auto take = [&](int id) {
    auto it = nodes.find(id);
    if (it == nodes.end())
      throw ParseError("proof: node " + std::to_string(id) + " missing, reused, or on a cycle");
    auto n = std::move(it->second);
    nodes.erase(it);
    return n;
  };
  struct Frame {
    std::unique_ptr<ProofNode> node;
    const std::vector<int>* kids;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{take(root_id), &pending_kids[root_id]});
  std::unique_ptr<ProofNode> done;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (done) {
      f.node->kids.push_back(std::move(done));
      done = nullptr;
    }
    if (f.next < f.kids->size()) {
      int k = (*f.kids)[f.next++];
      stack.push_back(Frame{take(k), &pending_kids[k]});
      continue;
    }
    done = std::move(f.node);
    stack.pop_back();
  }
  proof.root = std::move(done);
  return proof;
}

}  // namespace pc
