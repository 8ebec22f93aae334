#include "cobeh/equivalence/cts_equiv.hpp"

#include <algorithm>
#include <map>

#include "cobeh/core/error.hpp"
#include "cobeh/core/gfp.hpp"
#include "cobeh/liftings/liftings.hpp"

namespace cobeh {

CondRel cts_step(const Cts& c, const CondRel& r) {
  const SuccTable t = tabulate(c);
  const std::size_t nk = c.conditions.size();
  const std::size_t nx = c.states.size();
  CondRel out(nk, nx);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < nx; ++y) {
        if (rel_lift_cts(r, k, t.at(k, x), t.at(k, y))) out.set(k, x, y);
      }
    }
  }
  return out;
}

ConditionalBisimilarity cts_conditional_bisim(const Cts& c) {
  require_valid(validate(c), "conditional transition system");
  auto result = gfp([&c](const CondRel& r) { return cts_step(c, r); },
                    CondRel::full(c.conditions.size(), c.states.size()));
  return {std::move(result.relation), result.iterations};
}

BitRel bisimilar_under_all(const CondRel& r) {
  BitRel out = BitRel::full(r.states());
  for (std::size_t k = 0; k < r.conditions(); ++k) out &= r.slice(k);
  return out;
}

Partition cts_slice_bisim_oracle(const Cts& c, std::size_t k) {
  require_valid(validate(c), "conditional transition system");
  if (k >= c.conditions.size()) throw MalformedInput("condition index out of range");
  const std::size_t nx = c.states.size();
  std::vector<std::vector<std::size_t>> succ(nx);
  for (const auto& t : c.transitions) {
    if (t.condition == k) succ[t.from].push_back(t.to);
  }
  std::vector<std::size_t> block(nx, 0);
  std::size_t blocks = nx == 0 ? 0 : 1;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::size_t> next(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      std::vector<std::size_t> sig;
      for (auto y : succ[x]) sig.push_back(block[y]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      next[x] = ids.try_emplace({block[x], sig}, ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }
  Partition out(blocks);
  for (std::size_t x = 0; x < nx; ++x) out[block[x]].push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

BitRel partition_relation(const Partition& p, std::size_t n) {
  BitRel r(n);
  for (const auto& b : p) {
    for (auto x : b) {
      for (auto y : b) r.set(x, y);
    }
  }
  return r;
}

}  // namespace cobeh
