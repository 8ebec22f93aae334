#include "cobeh/io/generators.hpp"

namespace cobeh {

Rational random_weight(Rng& rng) {
  static const Rational pool[] = {Rational(0), Rational(1), Rational(-1),
                                  Rational(1, 2), Rational(-1, 2), Rational(2)};
  return pool[rng.below(6)];
}

Nda random_nda(Rng& rng, std::size_t max_states, std::size_t max_actions) {
  const std::size_t nx = rng.between(1, max_states);
  const std::size_t m = rng.between(1, max_actions);
  Nda n{Carrier::numbered("x", nx), Carrier::numbered("a", m), {}, {}};
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t y = 0; y < nx; ++y) {
        if (rng.chance(1, 2)) n.transitions.push_back({x, a, y});
      }
    }
    if (rng.chance(1, 2)) n.accepting.push_back(x);
  }
  return n;
}

Lwa random_lwa(Rng& rng, std::size_t max_states, std::size_t max_actions) {
  const std::size_t nx = rng.between(1, max_states);
  const std::size_t m = rng.between(1, max_actions);
  Lwa l{Carrier::numbered("x", nx), Carrier::numbered("a", m), zero_vector(nx), {}};
  for (auto& o : l.output) o = random_weight(rng);
  for (std::size_t a = 0; a < m; ++a) {
    QMatrix mat(nx, zero_vector(nx));
    for (auto& row : mat) {
      for (auto& entry : row) {
        if (rng.chance(1, 2)) entry = random_weight(rng);
      }
    }
    l.matrices.push_back(std::move(mat));
  }
  if (nx >= 2 && rng.chance(1, 2)) {
    l.output[nx - 1] = l.output[0];
    for (auto& mat : l.matrices) mat[nx - 1] = mat[0];
  }
  return l;
}

Cts random_cts(Rng& rng, std::size_t max_conditions, std::size_t max_states) {
  const std::size_t nk = rng.between(1, max_conditions);
  const std::size_t nx = rng.between(1, max_states);
  Cts c{Carrier::numbered("k", nk), Carrier::numbered("x", nx), {}};
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < nx; ++y) {
        if (rng.chance(1, 3)) c.transitions.push_back({k, x, y});
      }
    }
  }
  return c;
}

Lts random_lts(Rng& rng, std::size_t max_states, std::size_t max_actions) {
  const std::size_t nx = rng.between(1, max_states);
  const std::size_t m = rng.between(1, max_actions);
  Lts l{Carrier::numbered("x", nx), Carrier::numbered("a", m), {}};
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t y = 0; y < nx; ++y) {
        if (rng.chance(1, 2)) l.transitions.push_back({x, a, y});
      }
    }
  }
  return l;
}

}  // namespace cobeh
