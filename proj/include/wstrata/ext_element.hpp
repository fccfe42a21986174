#pragma once

#include <cstdint>
#include <vector>

#include "wstrata/coweight.hpp"
#include "wstrata/group_context.hpp"
#include "wstrata/signed_perm.hpp"

namespace wstrata {

// Element t^lambda * u of the extended affine Weyl group (translations by
// similitude coweights, extended by the finite group).  Multiplication uses
// (t^l u)(t^m v) = t^{l + u.m} (u v).  The Omega-grading of an element is the
// similitude coordinate lambda.c; two elements are Bruhat-comparable only
// when these agree.
struct ExtElement {
  CoweightSim lambda;
  SignedPermutation u;

  int rank() const { return u.rank(); }
  int omega() const { return lambda.c; }

  static ExtElement identity(int g);
  static ExtElement translation(CoweightSim);
  static ExtElement from_finite(SignedPermutation);

  ExtElement operator*(const ExtElement& o) const;
  ExtElement inverse() const;
  bool operator==(const ExtElement&) const = default;
};

std::size_t hash_value(const ExtElement&);

struct ExtElementHash {
  std::size_t operator()(const ExtElement& x) const { return hash_value(x); }
};

// Simple reflections realized concretely: for 1 <= i <= g the finite
// generator, and s_0 = (translation by e_1, sign flip at position 1) --
// the affine reflection in the wall <v, 2 e_1> = 1.
ExtElement simple_reflection(const GroupContext&, int i);

// Iwahori-Matsumoto length:
//   ell(t^l u) = sum over positive roots A with u^{-1} A positive of |<l,A>|
//              + sum over positive roots A with u^{-1} A negative of |<l,A> - 1|.
// The inverse-side convention is frozen against a breadth-first word-length
// oracle in the test suite.
int length(const GroupContext&, const ExtElement&);

// The unique length-zero element with Omega-grading one: t^mu * w with the
// finite part stored in the context.  Throws std::logic_error if the stored
// candidate fails the length-zero check (a broken length convention).
ExtElement tau(const GroupContext&);
ExtElement tau_power(const GroupContext&, int k);

// Conjugation x -> tau x tau^{-1}; on simple reflections this realizes the
// diagram involution s_i -> s_{g-i}.
ExtElement tau_conjugate(const GroupContext&, const ExtElement&);

// Canonical factorization x = tau^k * s_{i1} ... s_{iL} with the letters the
// greedy lexicographically-least reduced word of the grading-zero part.
struct CanonicalWord {
  int tau_power = 0;
  std::vector<int> letters;
  bool operator==(const CanonicalWord&) const = default;
};

CanonicalWord reduced_word(const GroupContext&, const ExtElement&);
ExtElement element_from_word(const GroupContext&, const CanonicalWord&);

// Letterwise application of i -> g-i to the canonical word (the diagram
// involution); agrees with tau-conjugation on the whole group.
ExtElement diagram_sigma(const GroupContext&, const ExtElement&);

// Generator indices (0..g) occurring in the canonical reduced word; the set
// is independent of the chosen reduced word.
std::vector<int> word_support(const GroupContext&, const ExtElement&);

bool left_descent(const GroupContext&, const ExtElement&, int i);
bool right_descent(const GroupContext&, const ExtElement&, int i);

// Breadth-first closure of a generating set; throws ResourceCapError when
// more than `cap` elements are produced.
std::vector<ExtElement> subgroup_closure(const GroupContext&, const std::vector<ExtElement>& gens,
                                         std::size_t cap);

}  // namespace wstrata
