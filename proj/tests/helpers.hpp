#pragma once

#include <random>

#include "parkfrob/laurent.hpp"
#include "parkfrob/partition.hpp"
#include "parkfrob/symfunc.hpp"

namespace testutil {

using parkfrob::LaurentQT;

inline const LaurentQT q = LaurentQT::q();
inline const LaurentQT t = LaurentQT::t();

inline LaurentQT pow(const LaurentQT& x, int e) {
  LaurentQT r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Small random polynomial with q-degree <= dq and t-degree <= dt.
inline LaurentQT random_poly(std::mt19937& rng, int dq, int dt, int terms = 4) {
  std::uniform_int_distribution<int> eq(0, dq);
  std::uniform_int_distribution<int> et(0, dt);
  std::uniform_int_distribution<int> c(-5, 5);
  LaurentQT f;
  for (int i = 0; i < terms; ++i) f.add_term({eq(rng), et(rng)}, c(rng));
  return f;
}

inline parkfrob::SymFunc random_symfunc(std::mt19937& rng, int degree, parkfrob::Basis b) {
  parkfrob::SymFunc f(degree, b);
  for (const auto& p : parkfrob::partitions_of(degree)) {
    if (rng() % 2) f.add_term(p, random_poly(rng, 2, 2, 2));
  }
  return f;
}

}  // namespace testutil
