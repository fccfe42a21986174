#pragma once

#include <cstdint>
#include <vector>

#include "wstrata/signed_perm.hpp"

namespace wstrata {

// A positive root of the C_g root system.
//   diff : e_i - e_j   (1 <= i < j <= g)
//   sum  : e_i + e_j   (1 <= i < j <= g)
//   lng  : 2 e_i
struct Root {
  enum class Kind { diff, sum, lng };
  Kind kind;
  int i;
  int j;  // unused for lng
};

// Frozen combinatorial data for rank g: the finite simple generators as
// signed permutations, the g^2 positive roots, the diagram involution
// i -> g - i on affine indices {0..g}, and the finite part of the length-zero
// generator of the Omega-grading (window (-g, ..., -1)).
class GroupContext {
 public:
  explicit GroupContext(int g);  // throws std::invalid_argument unless 1 <= g <= 12

  int rank() const { return g_; }
  const SignedPermutation& generator(int i) const;  // 1 <= i <= g
  const std::vector<Root>& positive_roots() const { return roots_; }
  int frobenius(int i) const;  // i -> g - i on {0..g}
  const SignedPermutation& tau_finite_part() const { return tau_finite_; }
  std::uint64_t group_order() const;  // |W_g| = 2^g g!

 private:
  int g_;
  std::vector<SignedPermutation> gens_;  // slot 0 holds the identity
  std::vector<Root> roots_;
  SignedPermutation tau_finite_;
};

// Image of a positive root under w; returns true when the image is negative.
bool root_image_negative(const SignedPermutation& w, const Root& r);

// Greedy lexicographically-least reduced word of a finite element over
// letters 1..g (at each step the smallest left descent is stripped).
std::vector<int> finite_reduced_word(const GroupContext&, const SignedPermutation&);

// The 2^g minimal-length representatives of the cosets w<S_g> where
// S_g = <s_1..s_{g-1}>: exactly the elements with no right descent among
// s_1..s_{g-1}.  Sorted by (length, reduced word lexicographic).
std::vector<SignedPermutation> final_elements(const GroupContext&);

// Every element of the finite group, enumerated directly from windows
// (2^g g! of them); ordered by underlying permutation, then sign pattern.
std::vector<SignedPermutation> all_group_elements(const GroupContext&);

// Embedding of W_c into W_g acting on the last c window positions,
// on letters: s_j -> s_{g-c+j} for 1 <= j <= c.
SignedPermutation embed_word(const GroupContext&, int c, const std::vector<int>& word);
// Same embedding applied to an element of W_c given by its window.
SignedPermutation embed_element(const GroupContext&, int c, const SignedPermutation& u);

enum class CosetSide { left, right, two_sided };

// Minimal-length representative of <gens>*u, u*<gens> or <gens>*u*<gens>,
// where gens is a subset of {1..g}; found by greedy descent stripping.
SignedPermutation coset_min_rep(const GroupContext&, SignedPermutation u,
                                const std::vector<int>& gens, CosetSide side);

}  // namespace wstrata
