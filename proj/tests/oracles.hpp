#pragma once

// Reference implementations used only by the tests. Each works from the raw
// transition data with the most direct algorithm available and shares no
// code with the engines it checks.

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "cobeh/systems/systems.hpp"

namespace oracle {

using cobeh::Mask;

inline Mask nda_post(const cobeh::Nda& n, Mask u, std::size_t a) {
  Mask out = 0;
  for (const auto& t : n.transitions) {
    if (t.action == a && ((u >> t.from) & 1U)) out |= Mask{1} << t.to;
  }
  return out;
}

inline bool nda_accepts(const cobeh::Nda& n, Mask u) {
  for (auto x : n.accepting) {
    if ((u >> x) & 1U) return true;
  }
  return false;
}

// Language equivalence of two subsets: explore reachable pairs and look for
// one where acceptance differs.
inline bool nda_equivalent(const cobeh::Nda& n, Mask u, Mask v) {
  std::set<std::pair<Mask, Mask>> seen{{u, v}};
  std::deque<std::pair<Mask, Mask>> todo{{u, v}};
  while (!todo.empty()) {
    auto [p, q] = todo.front();
    todo.pop_front();
    if (nda_accepts(n, p) != nda_accepts(n, q)) return false;
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      std::pair<Mask, Mask> next{nda_post(n, p, a), nda_post(n, q, a)};
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return true;
}

using QVec = std::vector<mpq_class>;

inline QVec to_mpq(const cobeh::QVector& v) {
  QVec out;
  for (const auto& r : v) {
    mpq_class q(r.numerator() + "/" + r.denominator());
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

// Every trace p M_w . o with |w| <= maxlen, level by level.
inline std::vector<mpq_class> lwa_traces(const cobeh::Lwa& l, const QVec& p, std::size_t maxlen) {
  const std::size_t n = l.states.size();
  const QVec o = to_mpq(l.output);
  std::vector<std::vector<QVec>> mats;
  for (const auto& m : l.matrices) {
    std::vector<QVec> rows;
    for (const auto& row : m) rows.push_back(to_mpq(row));
    mats.push_back(std::move(rows));
  }
  std::vector<mpq_class> out;
  std::vector<QVec> level{p};
  for (std::size_t len = 0; len <= maxlen; ++len) {
    std::vector<QVec> next;
    for (const auto& v : level) {
      mpq_class t = 0;
      for (std::size_t i = 0; i < n; ++i) t += v[i] * o[i];
      out.push_back(t);
      for (const auto& m : mats) {
        QVec w(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) w[j] += v[i] * m[i][j];
        }
        next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
  return out;
}

// Bisimilarity of the LTS x -> delta(k, x), from the definition: drop pairs
// violating the transfer conditions until nothing changes.
inline std::vector<std::vector<bool>> cts_slice_bisim(const cobeh::Cts& c, std::size_t k) {
  const std::size_t n = c.states.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& t : c.transitions) {
    if (t.condition == k) succ[t.from].push_back(t.to);
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
  auto matched = [&](std::size_t x, std::size_t y) {
    for (auto s : succ[x]) {
      bool found = false;
      for (auto t : succ[y]) found = found || rel[s][t];
      if (!found) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rel[x][y] && !(matched(x, y) && matched(y, x))) {
          rel[x][y] = false;
          changed = true;
        }
      }
    }
  }
  return rel;
}

// (trace, final state) for every path of length <= maxlen from x.
inline std::vector<std::pair<std::vector<std::size_t>, std::size_t>> lts_paths(const cobeh::Lts& l, std::size_t x,
                                                                                std::size_t maxlen) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out{{{}, x}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].first.size() == maxlen) continue;
    for (const auto& t : l.transitions) {
      if (t.from != out[i].second) continue;
      auto w = out[i].first;
      w.push_back(t.action);
      out.push_back({w, t.to});
    }
  }
  return out;
}

inline std::uint64_t initials(const cobeh::Lts& l, std::size_t x) {
  std::uint64_t m = 0;
  for (const auto& t : l.transitions) {
    if (t.from == x) m |= std::uint64_t{1} << t.action;
  }
  return m;
}

using Trace = std::vector<std::size_t>;

inline std::set<Trace> traces(const cobeh::Lts& l, std::size_t x, std::size_t maxlen) {
  std::set<Trace> out;
  for (const auto& [w, y] : lts_paths(l, x, maxlen)) out.insert(w);
  return out;
}

// (w, Z) with Z disjoint from the initial actions of some state reached by w.
inline std::set<std::pair<Trace, std::uint64_t>> failures(const cobeh::Lts& l, std::size_t x, std::size_t maxlen) {
  std::set<std::pair<Trace, std::uint64_t>> out;
  const std::uint64_t all = (std::uint64_t{1} << l.alphabet.size()) - 1;
  for (const auto& [w, y] : lts_paths(l, x, maxlen)) {
    const std::uint64_t refusable = all & ~initials(l, y);
    for (std::uint64_t z = 0; z <= all; ++z) {
      if ((z & ~refusable) == 0) out.insert({w, z});
    }
  }
  return out;
}

inline std::set<std::pair<Trace, std::uint64_t>> ready_pairs(const cobeh::Lts& l, std::size_t x, std::size_t maxlen) {
  std::set<std::pair<Trace, std::uint64_t>> out;
  for (const auto& [w, y] : lts_paths(l, x, maxlen)) out.insert({w, initials(l, y)});
  return out;
}

}  // namespace oracle
