#pragma once

#include <cstdint>
#include <vector>

namespace wstrata {

// Element of the hyperoctahedral group W_g (type C_g Weyl group), i.e. a
// permutation w of {-g,...,-1,1,...,g} with w(-i) = -w(i).  Stored in window
// notation: window()[i-1] = w(i) for 1 <= i <= g.
//
// Generator convention (fixed throughout the project):
//   s_i (1 <= i <= g-1) swaps window positions i and i+1,
//   s_g flips the sign at window position g.
// Composition is right-to-left: (u*v)(i) = u(v(i)).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int g);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  // Signed evaluation: accepts i in {-g..-1, 1..g}.
  int apply(int i) const;

  bool is_identity() const;
  SignedPermutation operator*(const SignedPermutation& v) const;
  SignedPermutation inverse() const;
  bool operator==(const SignedPermutation&) const = default;

  // Type-C inversion statistic: the number of positive roots
  // (e_i - e_j, e_i + e_j for i < j, and 2 e_i) sent to negative roots.
  // Equals the Coxeter length with respect to s_1..s_g.
  int inversions() const;

  // ell(w s_i) < ell(w), with 1 <= i <= g.
  bool right_descent(int i) const;
  // ell(s_i w) < ell(w), with 1 <= i <= g.
  bool left_descent(int i) const;

 private:
  std::vector<int> window_;
};

// Whether the root e_|p|*sgn(p) + e_|q|*sgn(q) (with p = q meaning a long
// root 2 e_|p|) is a negative root.
bool signed_pair_negative(int p, int q);

std::size_t hash_value(const SignedPermutation&);

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const { return hash_value(w); }
};

}  // namespace wstrata
