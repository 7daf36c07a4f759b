#include "proofcomp/brute.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pc {

namespace {

// Periodic bit patterns for variable positions 0..5 within one 64-lane block.
constexpr uint64_t kPattern[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
};

}  // namespace

uint64_t var_lanes(size_t var_index, uint64_t lo) {
  if (var_index < 6) return kPattern[var_index];
  return ((lo >> var_index) & 1u) ? ~0ull : 0ull;
}

void collect_atom_lanes(const F& f, const std::vector<AtomId>& vars, uint64_t lo,
                        std::unordered_map<const Formula*, uint64_t>& out) {
  if (f->kind == Kind::Atom) {
    if (out.count(f.get())) return;
    auto it = std::lower_bound(vars.begin(), vars.end(), f->atom);
    if (it == vars.end() || *it != f->atom)
      throw DomainError("assignment space does not cover atom " + std::to_string(f->atom));
    out.emplace(f.get(), var_lanes(static_cast<size_t>(it - vars.begin()), lo));
    return;
  }
  if (f->kind == Kind::ExtAtom) throw DomainError("extended atoms must be interned first");
  for (const F& k : f->kids) collect_atom_lanes(k, vars, lo, out);
}

std::optional<uint64_t> brute_find(size_t nvars, const BruteOpts& opts,
                                   const std::function<uint64_t(uint64_t)>& chunk) {
  if (nvars > static_cast<size_t>(opts.atom_cap))
    throw CapExceeded("brute force over " + std::to_string(nvars) + " atoms exceeds cap " +
                      std::to_string(opts.atom_cap));
  const uint64_t total = 1ull << nvars;
  if (nvars < 6) {
    uint64_t mask = chunk(0) & ((total == 64) ? ~0ull : ((1ull << total) - 1));
    if (!mask) return std::nullopt;
    return static_cast<uint64_t>(__builtin_ctzll(mask));
  }
  const uint64_t nchunks = total >> 6;
  int workers = std::max(1, opts.workers);
  if (nchunks < 4 || workers == 1) {
    for (uint64_t c = 0; c < nchunks; ++c) {
      uint64_t mask = chunk(c << 6);
      if (mask) return (c << 6) + __builtin_ctzll(mask);
    }
    return std::nullopt;
  }
  workers = static_cast<int>(std::min<uint64_t>(workers, nchunks));
  std::atomic<uint64_t> best{~0ull};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const uint64_t lo_c = nchunks * w / workers;
      const uint64_t hi_c = nchunks * (w + 1) / workers;
      for (uint64_t c = lo_c; c < hi_c; ++c) {
        if ((c << 6) >= best.load(std::memory_order_relaxed)) return;
        uint64_t mask = chunk(c << 6);
        if (mask) {
          uint64_t idx = (c << 6) + __builtin_ctzll(mask);
          uint64_t cur = best.load(std::memory_order_relaxed);
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  uint64_t got = best.load();
  if (got == ~0ull) return std::nullopt;
  return got;
}

}  // namespace pc
