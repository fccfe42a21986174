#include "wstrata/signed_perm.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace wstrata {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int g = static_cast<int>(window_.size());
  if (g < 1) throw std::invalid_argument("signed permutation needs rank >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(g) + 1, false);
  for (int v : window_) {
    const int a = std::abs(v);
    if (a < 1 || a > g || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("window is not a signed permutation");
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int g) {
  std::vector<int> w(static_cast<std::size_t>(g));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::apply(int i) const {
  if (i == 0 || std::abs(i) > rank()) throw std::invalid_argument("index out of range");
  const int v = window_[static_cast<std::size_t>(std::abs(i)) - 1];
  return i > 0 ? v : -v;
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (window_[static_cast<std::size_t>(i) - 1] != i) return false;
  return true;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& v) const {
  if (rank() != v.rank()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) w[static_cast<std::size_t>(i) - 1] = apply(v.apply(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) {
    const int v = window_[static_cast<std::size_t>(i) - 1];
    w[static_cast<std::size_t>(std::abs(v)) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

bool signed_pair_negative(int p, int q) {
  if (p > 0 && q > 0) return false;
  if (p < 0 && q < 0) return true;
  // Mixed signs: e_a - e_b is positive exactly when a < b.
  const int pos = p > 0 ? p : q;
  const int neg = p < 0 ? -p : -q;
  return pos > neg;
}

int SignedPermutation::inversions() const {
  const int g = rank();
  int count = 0;
  for (int i = 1; i <= g; ++i) {
    const int wi = window_[static_cast<std::size_t>(i) - 1];
    if (wi < 0) ++count;  // image of 2 e_i
    for (int j = i + 1; j <= g; ++j) {
      const int wj = window_[static_cast<std::size_t>(j) - 1];
      if (signed_pair_negative(wi, -wj)) ++count;  // image of e_i - e_j
      if (signed_pair_negative(wi, wj)) ++count;   // image of e_i + e_j
    }
  }
  return count;
}

bool SignedPermutation::right_descent(int i) const {
  const int g = rank();
  if (i < 1 || i > g) throw std::invalid_argument("generator index out of range");
  if (i == g) return window_[static_cast<std::size_t>(g) - 1] < 0;  // image of 2 e_g
  return signed_pair_negative(window_[static_cast<std::size_t>(i) - 1],
                              -window_[static_cast<std::size_t>(i)]);
}

bool SignedPermutation::left_descent(int i) const { return inverse().right_descent(i); }

std::size_t hash_value(const SignedPermutation& w) {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (int v : w.window()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned char>(v & 0xff));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wstrata
