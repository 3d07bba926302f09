#pragma once

// Deterministic random generation of field elements, points, lines and maps,
// used by the randomized property checks. Always seed explicitly.

#include <random>

#include "gpd/projective.hpp"

namespace gpd::sampling {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline FieldElement random_element(const Field& f, Rng& rng, int bound = 6) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(f.degree()));
  for (int i = 0; i < f.degree(); ++i) coeffs.push_back(random_rational(rng, bound));
  return f.element(std::move(coeffs));
}

inline FieldElement random_nonzero_element(const Field& f, Rng& rng,
                                           int bound = 6) {
  for (;;) {
    FieldElement x = random_element(f, rng, bound);
    if (!x.is_zero()) return x;
  }
}

inline ProjPoint random_point(const Field& f, std::size_t coords, Rng& rng,
                              int bound = 6) {
  for (;;) {
    std::vector<FieldElement> v;
    v.reserve(coords);
    bool nonzero = false;
    for (std::size_t i = 0; i < coords; ++i) {
      v.push_back(random_element(f, rng, bound));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) return ProjPoint(std::move(v));
  }
}

inline ParamLine random_line3(const Field& f, Rng& rng, int bound = 6) {
  for (;;) {
    ProjPoint a = random_point(f, 4, rng, bound);
    ProjPoint b = random_point(f, 4, rng, bound);
    try {
      return ParamLine(std::move(a), std::move(b));
    } catch (const PreconditionError&) {
    }
  }
}

inline PglMap random_invertible_map(const Field& f, Rng& rng, int bound = 6) {
  for (;;) {
    try {
      return PglMap(random_element(f, rng, bound), random_element(f, rng, bound),
                    random_element(f, rng, bound), random_element(f, rng, bound));
    } catch (const SingularMatrixError&) {
    }
  }
}

// A triple (u, v, w) with v skew to u and to w, for exercising projections.
struct LineTriple3 {
  ParamLine u, v, w;
};

inline LineTriple3 random_projection_triple(const Field& f, Rng& rng,
                                            int bound = 4) {
  for (;;) {
    ParamLine u = random_line3(f, rng, bound);
    ParamLine v = random_line3(f, rng, bound);
    ParamLine w = random_line3(f, rng, bound);
    if (lines_skew(u, v) && lines_skew(v, w)) return LineTriple3{u, v, w};
  }
}

}  // namespace gpd::sampling
