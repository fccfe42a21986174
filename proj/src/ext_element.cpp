#include "wstrata/ext_element.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "wstrata/errors.hpp"

namespace wstrata {

ExtElement ExtElement::identity(int g) {
  return {zero_coweight(g), SignedPermutation::identity(g)};
}

ExtElement ExtElement::translation(CoweightSim lambda) {
  const int g = lambda.rank();
  return {std::move(lambda), SignedPermutation::identity(g)};
}

ExtElement ExtElement::from_finite(SignedPermutation u) {
  const int g = u.rank();
  return {zero_coweight(g), std::move(u)};
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in composition");
  return {add(lambda, act(u, o.lambda)), u * o.u};
}

ExtElement ExtElement::inverse() const {
  SignedPermutation ui = u.inverse();
  CoweightSim li = act(ui, negate(lambda));
  return {std::move(li), std::move(ui)};
}

std::size_t hash_value(const ExtElement& x) {
  std::size_t h = hash_value(x.lambda);
  h ^= hash_value(x.u) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

ExtElement simple_reflection(const GroupContext& ctx, int i) {
  const int g = ctx.rank();
  if (i < 0 || i > g) throw std::invalid_argument("simple reflection index out of range");
  if (i >= 1) return ExtElement::from_finite(ctx.generator(i));
  CoweightSim e1 = zero_coweight(g);
  e1.a[0] = 1;
  std::vector<int> w(static_cast<std::size_t>(g));
  for (int k = 1; k <= g; ++k) w[static_cast<std::size_t>(k) - 1] = k;
  w[0] = -1;
  return {std::move(e1), SignedPermutation(std::move(w))};
}

int length(const GroupContext& ctx, const ExtElement& x) {
  const SignedPermutation ui = x.u.inverse();
  int total = 0;
  for (const Root& r : ctx.positive_roots()) {
    const int p = pairing(x.lambda, r);
    if (root_image_negative(ui, r))
      total += std::abs(p - 1);
    else
      total += std::abs(p);
  }
  return total;
}

ExtElement tau(const GroupContext& ctx) {
  ExtElement t{minuscule_coweight(ctx.rank()), ctx.tau_finite_part()};
  if (length(ctx, t) != 0)
    throw std::logic_error("length convention broken: the grading-one generator has nonzero length");
  return t;
}

ExtElement tau_power(const GroupContext& ctx, int k) {
  ExtElement out = ExtElement::identity(ctx.rank());
  const ExtElement step = k >= 0 ? tau(ctx) : tau(ctx).inverse();
  for (int n = 0; n < std::abs(k); ++n) out = out * step;
  return out;
}

ExtElement tau_conjugate(const GroupContext& ctx, const ExtElement& x) {
  const ExtElement t = tau(ctx);
  return t * x * t.inverse();
}

CanonicalWord reduced_word(const GroupContext& ctx, const ExtElement& x) {
  CanonicalWord out;
  out.tau_power = x.omega();
  ExtElement part = tau_power(ctx, -out.tau_power) * x;
  int len = length(ctx, part);
  out.letters.reserve(static_cast<std::size_t>(len));
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= ctx.rank(); ++i) {
      ExtElement cand = simple_reflection(ctx, i) * part;
      if (length(ctx, cand) < len) {
        out.letters.push_back(i);
        part = std::move(cand);
        --len;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("positive-length element without left descent");
  }
  return out;
}

ExtElement element_from_word(const GroupContext& ctx, const CanonicalWord& w) {
  ExtElement x = tau_power(ctx, w.tau_power);
  for (int i : w.letters) x = x * simple_reflection(ctx, i);
  return x;
}

ExtElement diagram_sigma(const GroupContext& ctx, const ExtElement& x) {
  CanonicalWord w = reduced_word(ctx, x);
  for (int& i : w.letters) i = ctx.frobenius(i);
  return element_from_word(ctx, w);
}

std::vector<int> word_support(const GroupContext& ctx, const ExtElement& x) {
  std::vector<bool> seen(static_cast<std::size_t>(ctx.rank()) + 1, false);
  for (int i : reduced_word(ctx, x).letters) seen[static_cast<std::size_t>(i)] = true;
  std::vector<int> out;
  for (int i = 0; i <= ctx.rank(); ++i)
    if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

bool left_descent(const GroupContext& ctx, const ExtElement& x, int i) {
  return length(ctx, simple_reflection(ctx, i) * x) < length(ctx, x);
}

bool right_descent(const GroupContext& ctx, const ExtElement& x, int i) {
  return length(ctx, x * simple_reflection(ctx, i)) < length(ctx, x);
}

std::vector<ExtElement> subgroup_closure(const GroupContext& ctx,
                                         const std::vector<ExtElement>& gens, std::size_t cap) {
  std::unordered_set<ExtElement, ExtElementHash> seen;
  std::deque<ExtElement> queue;
  std::vector<ExtElement> out;
  const ExtElement id = ExtElement::identity(ctx.rank());
  seen.insert(id);
  queue.push_back(id);
  out.push_back(id);
  while (!queue.empty()) {
    ExtElement cur = queue.front();
    queue.pop_front();
    for (const ExtElement& s : gens) {
      ExtElement nxt = cur * s;
      if (seen.insert(nxt).second) {
        if (out.size() >= cap) throw ResourceCapError("subgroup closure exceeded its cap");
        out.push_back(nxt);
        queue.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

}  // namespace wstrata
