#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "proofcomp/formula.hpp"

namespace pc {

// 64-lane word for variable position `i` over the assignment block starting at
// the 64-aligned index `lo`: lane L holds bit i of assignment number lo+L.
uint64_t var_lanes(size_t var_index, uint64_t lo);

// Atom-node -> lane word map for every Atom node of f (keyed on node identity,
// as required by eval64). Extended atoms are rejected.
void collect_atom_lanes(const F& f, const std::vector<AtomId>& vars, uint64_t lo,
                        std::unordered_map<const Formula*, uint64_t>& out);

// Scans the 2^nvars assignment space in 64-lane chunks. `chunk(lo)` returns a
// hit mask for assignments lo..lo+63; brute_find returns the smallest hit
// index. Chunks may be evaluated concurrently (opts.workers), the result is
// deterministic. Throws CapExceeded when nvars > opts.atom_cap.
std::optional<uint64_t> brute_find(size_t nvars, const BruteOpts& opts,
                                   const std::function<uint64_t(uint64_t)>& chunk);

}  // namespace pc
