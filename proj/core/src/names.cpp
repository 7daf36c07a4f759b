#include "proofcomp/names.hpp"

#include <algorithm>

namespace pc {

std::string AtomName::display() const {
  if (kind == "ext") return "ext(" + ext_key + ")";
  std::string out = kind;
  for (int i : idx) out += "_" + std::to_string(i);
  return out;
}

AtomTable AtomTable::from_names(std::vector<AtomName> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  AtomTable t;
  for (auto& n : names) t.add(std::move(n));
  return t;
}

AtomId AtomTable::add(AtomName name, F wrapped) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  AtomId id = static_cast<AtomId>(names_.size());
  ids_.emplace(name, id);
  names_.push_back(std::move(name));
  wrapped_.push_back(std::move(wrapped));
  return id;
}

std::optional<AtomId> AtomTable::find(const AtomName& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

AtomId AtomTable::id_of(const AtomName& name) const {
  auto got = find(name);
  if (!got) throw DomainError("unknown atom name " + name.display());
  return *got;
}

const AtomName& AtomTable::name(AtomId id) const {
  if (id < 0 || static_cast<size_t>(id) >= names_.size())
    throw DomainError("atom id " + std::to_string(id) + " not in table");
  return names_[id];
}

F AtomTable::wrapped(AtomId id) const {
  if (id < 0 || static_cast<size_t>(id) >= wrapped_.size())
    throw DomainError("atom id " + std::to_string(id) + " not in table");
  return wrapped_[id];
}

F intern_ext_atoms(const F& f, AtomTable& table) {
  switch (f->kind) {
    case Kind::ExtAtom: {
      AtomName n{"ext", {}, print_formula(f->wrapped)};
      return atom(table.add(std::move(n), f->wrapped));
    }
    case Kind::Atom:
    case Kind::True:
    case Kind::False: return f;
    default: {
      std::vector<F> ks;
      ks.reserve(f->kids.size());
      bool changed = false;
      for (const F& k : f->kids) {
        F nk = intern_ext_atoms(k, table);
        changed |= (nk.get() != k.get());
        ks.push_back(std::move(nk));
      }
      if (!changed) return f;
      switch (f->kind) {
        case Kind::Not: return mk_not(ks[0]);
        case Kind::Box: return mk_box(ks[0]);
        case Kind::And: return mk_and(ks[0], ks[1]);
        case Kind::Or: return mk_or(ks[0], ks[1]);
        case Kind::Imp: return mk_imp(ks[0], ks[1]);
        case Kind::BigAnd: return big_and(std::move(ks));
        case Kind::BigOr: return big_or(std::move(ks));
        default: throw DomainError("intern_ext_atoms: bad node");
      }
    }
  }
}

}  // namespace pc
