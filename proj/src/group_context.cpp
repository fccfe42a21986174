#include "wstrata/group_context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wstrata {

namespace {

constexpr int kMaxRank = 12;

SignedPermutation make_generator(int g, int i) {
  std::vector<int> w(static_cast<std::size_t>(g));
  for (int k = 1; k <= g; ++k) w[static_cast<std::size_t>(k) - 1] = k;
  if (i < g) {
    std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
  } else {
    w[static_cast<std::size_t>(g) - 1] = -g;
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation make_tau_finite(int g) {
  // i -> -(g+1-i): the unique finite part making t^mu * this length zero.
  std::vector<int> w(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) w[static_cast<std::size_t>(i) - 1] = -(g + 1 - i);
  return SignedPermutation(std::move(w));
}

}  // namespace

GroupContext::GroupContext(int g) : g_(g), tau_finite_(make_tau_finite(std::max(g, 1))) {
  if (g < 1 || g > kMaxRank) throw std::invalid_argument("rank out of range (need 1 <= g <= 12)");
  gens_.reserve(static_cast<std::size_t>(g) + 1);
  gens_.push_back(SignedPermutation::identity(g));  // slot 0: placeholder
  for (int i = 1; i <= g; ++i) gens_.push_back(make_generator(g, i));
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) roots_.push_back({Root::Kind::diff, i, j});
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) roots_.push_back({Root::Kind::sum, i, j});
  for (int i = 1; i <= g; ++i) roots_.push_back({Root::Kind::lng, i, i});
}

const SignedPermutation& GroupContext::generator(int i) const {
  if (i < 1 || i > g_) throw std::invalid_argument("finite generator index out of range");
  return gens_[static_cast<std::size_t>(i)];
}

int GroupContext::frobenius(int i) const {
  if (i < 0 || i > g_) throw std::invalid_argument("affine index out of range");
  return g_ - i;
}

std::uint64_t GroupContext::group_order() const {
  std::uint64_t n = 1;
  for (int i = 1; i <= g_; ++i) n *= 2ull * static_cast<std::uint64_t>(i);
  return n;
}

bool root_image_negative(const SignedPermutation& w, const Root& r) {
  switch (r.kind) {
    case Root::Kind::diff:
      return signed_pair_negative(w.apply(r.i), -w.apply(r.j));
    case Root::Kind::sum:
      return signed_pair_negative(w.apply(r.i), w.apply(r.j));
    case Root::Kind::lng:
      return w.apply(r.i) < 0;
  }
  return false;
}

std::vector<int> finite_reduced_word(const GroupContext& ctx, const SignedPermutation& w) {
  std::vector<int> word;
  SignedPermutation cur = w;
  int len = cur.inversions();
  word.reserve(static_cast<std::size_t>(len));
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= ctx.rank(); ++i) {
      if (!cur.left_descent(i)) continue;
      word.push_back(i);
      cur = ctx.generator(i) * cur;
      --len;
      found = true;
      break;
    }
    if (!found) throw std::logic_error("finite element of positive length without left descent");
  }
  return word;
}

std::vector<SignedPermutation> final_elements(const GroupContext& ctx) {
  const int g = ctx.rank();
  std::vector<SignedPermutation> out;
  out.reserve(1u << g);
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    // mask bit k-1 set  <=>  value k appears negated in the window.
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(g));
    for (int k = 1; k <= g; ++k)
      if (!(mask & (1u << (k - 1)))) w.push_back(k);
    for (int k = g; k >= 1; --k)
      if (mask & (1u << (k - 1))) w.push_back(-k);
    out.emplace_back(std::move(w));
  }
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t n = 0; n < out.size(); ++n)
    keys.emplace_back(finite_reduced_word(ctx, out[n]), n);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<SignedPermutation> sorted;
  sorted.reserve(out.size());
  for (const auto& [word, n] : keys) sorted.push_back(out[n]);
  return sorted;
}

std::vector<SignedPermutation> all_group_elements(const GroupContext& ctx) {
  const int g = ctx.rank();
  std::vector<int> base(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  std::vector<SignedPermutation> out;
  out.reserve(ctx.group_order());
  do {
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < g; ++i)
        if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

SignedPermutation embed_word(const GroupContext& ctx, int c, const std::vector<int>& word) {
  const int g = ctx.rank();
  if (c < 0 || c > g) throw std::invalid_argument("subgroup rank out of range");
  SignedPermutation u = SignedPermutation::identity(g);
  for (int j : word) {
    if (j < 1 || j > c) throw std::invalid_argument("letter index out of range for the subgroup");
    u = u * ctx.generator(g - c + j);
  }
  return u;
}

SignedPermutation embed_element(const GroupContext& ctx, int c, const SignedPermutation& u) {
  const int g = ctx.rank();
  if (c < 1 || c > g) throw std::invalid_argument("subgroup rank out of range");
  if (u.rank() != c) throw std::invalid_argument("element rank does not match subgroup rank");
  std::vector<int> w(static_cast<std::size_t>(g));
  for (int i = 1; i <= g - c; ++i) w[static_cast<std::size_t>(i) - 1] = i;
  for (int k = 1; k <= c; ++k) {
    const int v = u.apply(k);
    const int img = g - c + std::abs(v);
    w[static_cast<std::size_t>(g - c + k) - 1] = v > 0 ? img : -img;
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation coset_min_rep(const GroupContext& ctx, SignedPermutation u,
                                const std::vector<int>& gens, CosetSide side) {
  const std::set<int> gen_set(gens.begin(), gens.end());
  for (int i : gen_set)
    if (i < 1 || i > ctx.rank()) throw std::invalid_argument("generator index out of range");
  const bool use_left = side == CosetSide::left || side == CosetSide::two_sided;
  const bool use_right = side == CosetSide::right || side == CosetSide::two_sided;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : gen_set) {
      if (use_left && u.left_descent(i)) {
        u = ctx.generator(i) * u;
        changed = true;
      }
      if (use_right && u.right_descent(i)) {
        u = u * ctx.generator(i);
        changed = true;
      }
    }
  }
  return u;
}

}  // namespace wstrata
