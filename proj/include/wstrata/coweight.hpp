#pragma once

#include <cstdint>
#include <vector>

#include "wstrata/group_context.hpp"
#include "wstrata/signed_perm.hpp"

namespace wstrata {

// Cocharacter of the diagonal torus of the similitude group: the tuple
// (a_1, ..., a_g; c).  The similitude coordinate c enters all pairings with
// sum and long roots:
//   <lambda, e_i - e_j> = a_i - a_j
//   <lambda, e_i + e_j> = a_i + a_j - c
//   <lambda, 2 e_i>     = 2 a_i - c
struct CoweightSim {
  std::vector<int> a;
  int c = 0;

  int rank() const { return static_cast<int>(a.size()); }
  bool operator==(const CoweightSim&) const = default;
};

inline CoweightSim zero_coweight(int g) { return {std::vector<int>(static_cast<std::size_t>(g), 0), 0}; }

// The dominant minuscule similitude coweight (1, ..., 1; 1).
inline CoweightSim minuscule_coweight(int g) {
  return {std::vector<int>(static_cast<std::size_t>(g), 1), 1};
}

int pairing(const CoweightSim& lambda, const Root& r);

// Weyl action preserving the similitude coordinate: entry a_j lands at
// position u(j) when u(j) > 0 and contributes c - a_j at position -u(j)
// otherwise.
CoweightSim act(const SignedPermutation& u, const CoweightSim& lambda);

CoweightSim add(const CoweightSim&, const CoweightSim&);
CoweightSim negate(const CoweightSim&);

std::size_t hash_value(const CoweightSim&);

}  // namespace wstrata
