#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "proofcomp/formula.hpp"

namespace pc {

enum class GateType : uint8_t { Input, True, False, Not, And, Or, Imp, Box };

struct Gate {
  GateType type = GateType::True;
  int input = 0;  // 1-based input index, Input gates only
  int a = -1;     // predecessor ids
  int b = -1;

  static int arity(GateType t);
};

// Multi-output DAG over typed gates. Gate ids are dense and topologically
// ordered: every predecessor id is smaller than the gate's own id; this is
// re-validated when a circuit is built or parsed.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int n_inputs, std::vector<Gate> gates, std::vector<int> outputs);

  int n_inputs() const { return n_inputs_; }
  int64_t size() const { return static_cast<int64_t>(gates_.size()); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& outputs() const { return outputs_; }

  bool is_monotone() const;  // no negation and no implication gates
  bool has_box() const;

  // Classical evaluation, one bit per input. Box gates are an error.
  std::vector<bool> eval(const std::vector<bool>& input) const;
  // 64 evaluations at once; input_lanes[i] carries input i+1 across lanes.
  std::vector<uint64_t> eval64(const std::vector<uint64_t>& input_lanes) const;

  // Formula of a single-output circuit, duplicating shared sub-circuits.
  // input_atoms[i] is the atom standing for input i+1; defaults to atom(i).
  F unfold(const std::vector<AtomId>& input_atoms = {}) const;
  // Unfolded formula size without building it (saturates at INT64_MAX/2).
  int64_t unfold_size() const;

  Circuit project_forgetful() const;  // erase box gates, rewire through
  Circuit project_collapse() const;   // replace box gates by constant true

  std::string print() const;
  static Circuit parse(const std::string& text);

 private:
  int n_inputs_ = 0;
  std::vector<Gate> gates_;
  std::vector<int> outputs_;
  void validate() const;
};

// Incremental builder with structural gate sharing (hash-consing). Sharing
// never changes semantics; it only keeps extracted circuits small.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int n_inputs) : n_inputs_(n_inputs) {}

  int input(int index_1based);
  int constant(bool value);
  int not_(int a);
  int box_(int a);
  int and_(int a, int b);
  int or_(int a, int b);
  int imp_(int a, int b);

  // Compile a formula over the given atom->input mapping (1-based inputs).
  int formula(const F& f, const std::map<AtomId, int>& atom_to_input);

  int n_inputs() const { return n_inputs_; }
  Circuit build(std::vector<int> outputs) const;

 private:
  int mk(GateType t, int input, int a, int b);
  int n_inputs_;
  std::vector<Gate> gates_;
  std::map<std::tuple<GateType, int, int, int>, int> dedup_;
};

}  // namespace pc
