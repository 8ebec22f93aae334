#include "cobeh/quotient/cts_quotient.hpp"

#include <set>
#include <string>

#include "cobeh/core/error.hpp"
#include "cobeh/equivalence/cts_equiv.hpp"

namespace cobeh {

CtsQuotient cts_quotient(const Cts& c, const CondRel& r) {
  require_valid(validate(c), "conditional transition system");
  const std::size_t nk = c.conditions.size();
  const std::size_t nx = c.states.size();
  if (r.conditions() != nk || r.states() != nx) {
    throw DimensionMismatch("relation does not match the system's conditions and states");
  }
  const CondRel image = cts_step(c, r);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < nx; ++y) {
        if (r.contains(k, x, y) && !image.contains(k, x, y)) {
          throw MalformedInput("not a conditional bisimulation: (" + c.conditions.name(k) + ", " +
                               c.states.name(x) + ", " + c.states.name(y) +
                               ") fails the transfer condition");
        }
      }
    }
  }

  CtsQuotient q;
  q.class_of.assign(nk * nx, 0);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < nk; ++k) {
    for (const auto& cls : r.slice(k).classes()) {
      Mask members_mask = 0;
      for (auto x : cls) {
        members_mask |= singleton(x);
        q.class_of[k * nx + x] = labels.size();
      }
      labels.push_back(c.conditions.name(k) + "|" + format_subset(c.states, members_mask));
      q.class_condition.push_back(k);
    }
  }
  q.quotient.conditions = c.conditions;
  q.quotient.states = Carrier(std::move(labels));

  const SuccTable t = tabulate(c);
  for (std::size_t cls = 0; cls < q.class_condition.size(); ++cls) {
    const std::size_t k = q.class_condition[cls];
    std::optional<std::set<std::size_t>> agreed;
    for (std::size_t x = 0; x < nx; ++x) {
      if (q.class_of[k * nx + x] != cls) continue;
      std::set<std::size_t> succ;
      for (auto y : members(t.at(k, x))) succ.insert(q.class_of[k * nx + y]);
      if (agreed && *agreed != succ) {
        throw MalformedInput("quotient dynamics not well defined on class " +
                             q.quotient.states.name(cls));
      }
      agreed = std::move(succ);
    }
    for (auto to : *agreed) q.quotient.transitions.push_back({k, cls, to});
  }
  return q;
}

}  // namespace cobeh
