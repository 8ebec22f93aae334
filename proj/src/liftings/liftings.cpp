#include "cobeh/liftings/liftings.hpp"

#include <string>

#include "cobeh/core/error.hpp"

namespace cobeh {
namespace {

void require_pred_size(const Predicate& pred, std::size_t n, const char* what) {
  if (pred.size() != n) {
    throw MalformedInput(std::string(what) + ": predicate has " + std::to_string(pred.size()) +
                         " entries for " + std::to_string(n) + " states");
  }
}

}  // namespace

NdaFSet theta_nda(const FElem<Mask>& e) {
  NdaFSet out;
  if (e.term) {
    out.insert(NdaFElem::terminal());
    return out;
  }
  for (auto x : members(e.payload)) out.insert(NdaFElem::act(e.action, x));
  return out;
}

GValueNda gamma_nda(const NdaFSet& u, std::size_t num_actions) {
  GValueNda g{std::vector<Mask>(num_actions, 0), false};
  for (const auto& e : u) {
    if (e.term) {
      g.term = true;
    } else {
      if (e.action >= num_actions) throw MalformedInput("action index out of range");
      g.per_action[e.action] |= singleton(e.payload);
    }
  }
  return g;
}

LwaFMap theta_lwa(const FElem<QVector>& e) {
  LwaFMap out;
  if (e.term) {
    out.emplace(NdaFElem::terminal(), Rational(1));
    return out;
  }
  for (std::size_t x = 0; x < e.payload.size(); ++x) {
    if (!e.payload[x].is_zero()) out.emplace(NdaFElem::act(e.action, x), e.payload[x]);
  }
  return out;
}

GValueLwa gamma_lwa(const LwaFMap& p, std::size_t num_actions, std::size_t num_states) {
  GValueLwa g{std::vector<QVector>(num_actions, zero_vector(num_states)), Rational{}};
  for (const auto& [e, w] : p) {
    if (e.term) {
      g.out += w;
    } else {
      if (e.action >= num_actions || e.payload >= num_states) {
        throw MalformedInput("weighted element out of range");
      }
      g.per_action[e.action][e.payload] += w;
    }
  }
  return g;
}

std::set<std::pair<std::size_t, std::size_t>> gamma_cts(std::size_t k, Mask u) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (auto x : members(u)) out.emplace(k, x);
  return out;
}

Predicate mod_nda(const NdaModality& kind, const Predicate& pred, const DeterminizedMachine& d) {
  require_pred_size(pred, d.size(), "mod_nda");
  Predicate out(d.size(), false);
  if (kind.kind == NdaModality::Kind::termination) {
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = d.out[i] != 0;
    return out;
  }
  if (kind.action >= d.alphabet.size()) {
    throw MalformedInput("unknown action index " + std::to_string(kind.action));
  }
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = pred[d.target(i, kind.action)];
  return out;
}

Predicate mod_moore(const MooreModality& kind, const Predicate& pred,
                    const DeterminizedMachine& d) {
  require_pred_size(pred, d.size(), "mod_moore");
  Predicate out(d.size(), false);
  if (kind.kind == MooreModality::Kind::output) {
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = d.out[i] == kind.value;
    return out;
  }
  if (kind.action >= d.alphabet.size()) {
    throw MalformedInput("unknown action index " + std::to_string(kind.action));
  }
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = pred[d.target(i, kind.action)];
  return out;
}

Predicate mod_cts_box(const Cts& c, const Predicate& pred) {
  const SuccTable t = tabulate(c);
  const std::size_t n = c.states.size();
  require_pred_size(pred, c.conditions.size() * n, "mod_cts_box");
  Predicate out(pred.size(), false);
  for (std::size_t k = 0; k < c.conditions.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      bool all = true;
      for (auto y : members(t.at(k, x))) all = all && pred[k * n + y];
      out[k * n + x] = all;
    }
  }
  return out;
}

bool mod_lwa(const LwaModality& kind, const Region& region, const QVector& p, const Lwa& l) {
  if (kind.kind == LwaModality::Kind::output) return lwa_output(l, p) == kind.value;
  return region(lwa_step(l, p, kind.action));
}

bool rel_lift_nda(const BitRel& r, const NdaFSet& u, const NdaFSet& v, std::size_t num_actions) {
  const GValueNda gu = gamma_nda(u, num_actions);
  const GValueNda gv = gamma_nda(v, num_actions);
  if (gu.term != gv.term) return false;
  for (std::size_t a = 0; a < num_actions; ++a) {
    if (gu.per_action[a] >= r.size() || gv.per_action[a] >= r.size()) {
      throw MalformedInput("relation does not cover the subsets being compared");
    }
    if (!r.contains(gu.per_action[a], gv.per_action[a])) return false;
  }
  return true;
}

bool rel_lift_lwa(const Subspace& w, const LwaFMap& u, const LwaFMap& v,
                  std::size_t num_actions, std::size_t num_states) {
  if (w.dim() != num_states) throw DimensionMismatch("relation subspace has the wrong dimension");
  const GValueLwa gu = gamma_lwa(u, num_actions, num_states);
  const GValueLwa gv = gamma_lwa(v, num_actions, num_states);
  if (gu.out != gv.out) return false;
  for (std::size_t a = 0; a < num_actions; ++a) {
    if (!w.contains(sub(gu.per_action[a], gv.per_action[a]))) return false;
  }
  return true;
}

bool rel_lift_cts(const CondRel& r, std::size_t k, Mask u, Mask v) {
  if (k >= r.conditions()) throw MalformedInput("condition index out of range");
  const auto xs = members(u);
  const auto ys = members(v);
  for (auto x : xs) {
    bool matched = false;
    for (auto y : ys) matched = matched || r.contains(k, x, y);
    if (!matched) return false;
  }
  for (auto y : ys) {
    bool matched = false;
    for (auto x : xs) matched = matched || r.contains(k, x, y);
    if (!matched) return false;
  }
  return true;
}

}  // namespace cobeh
