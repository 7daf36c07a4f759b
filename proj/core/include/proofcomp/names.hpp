#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proofcomp/formula.hpp"

namespace pc {

// Structured atom name: a kind string plus integer indices (p_{1,2} etc.).
// Extended atoms <phi> use kind "ext" with the printed wrapped formula as key.
struct AtomName {
  std::string kind;
  std::vector<int> idx;
  std::string ext_key;

  auto tie() const { return std::tie(kind, idx, ext_key); }
  bool operator<(const AtomName& o) const { return tie() < o.tie(); }
  bool operator==(const AtomName& o) const { return tie() == o.tie(); }

  static AtomName indexed(std::string kind, std::vector<int> idx) {
    return AtomName{std::move(kind), std::move(idx), {}};
  }
  std::string display() const;
};

// Bidirectional structured-name <-> dense-id table. Ids are reproducible:
// a table frozen from a name set assigns ids in lexicographic name order;
// later additions are appended in call order.
class AtomTable {
 public:
  AtomTable() = default;
  static AtomTable from_names(std::vector<AtomName> names);

  AtomId add(AtomName name, F wrapped = nullptr);  // returns existing id if present
  std::optional<AtomId> find(const AtomName& name) const;
  AtomId id_of(const AtomName& name) const;  // throws DomainError if absent

  const AtomName& name(AtomId id) const;
  // Wrapped formula of an extended atom, null for ordinary atoms.
  F wrapped(AtomId id) const;
  size_t size() const { return names_.size(); }
  std::string display(AtomId id) const { return name(id).display(); }

 private:
  std::vector<AtomName> names_;
  std::vector<F> wrapped_;
  std::map<AtomName, AtomId> ids_;
};

// Replace every extended atom of f by an ordinary atom registered in `table`
// (kind "ext", keyed by the printed wrapped formula). Idempotent per table.
F intern_ext_atoms(const F& f, AtomTable& table);

}  // namespace pc
