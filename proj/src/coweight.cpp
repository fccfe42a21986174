#include "wstrata/coweight.hpp"

#include <stdexcept>

namespace wstrata {

int pairing(const CoweightSim& lambda, const Root& r) {
  const auto& a = lambda.a;
  switch (r.kind) {
    case Root::Kind::diff:
      return a[static_cast<std::size_t>(r.i) - 1] - a[static_cast<std::size_t>(r.j) - 1];
    case Root::Kind::sum:
      return a[static_cast<std::size_t>(r.i) - 1] + a[static_cast<std::size_t>(r.j) - 1] - lambda.c;
    case Root::Kind::lng:
      return 2 * a[static_cast<std::size_t>(r.i) - 1] - lambda.c;
  }
  return 0;
}

CoweightSim act(const SignedPermutation& u, const CoweightSim& lambda) {
  if (u.rank() != lambda.rank()) throw std::invalid_argument("rank mismatch in coweight action");
  CoweightSim out = lambda;
  for (int j = 1; j <= u.rank(); ++j) {
    const int k = u.apply(j);
    const int aj = lambda.a[static_cast<std::size_t>(j) - 1];
    if (k > 0)
      out.a[static_cast<std::size_t>(k) - 1] = aj;
    else
      out.a[static_cast<std::size_t>(-k) - 1] = lambda.c - aj;
  }
  return out;
}

CoweightSim add(const CoweightSim& x, const CoweightSim& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch in coweight sum");
  CoweightSim out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  out.c += y.c;
  return out;
}

CoweightSim negate(const CoweightSim& x) {
  CoweightSim out = x;
  for (int& v : out.a) v = -v;
  out.c = -out.c;
  return out;
}

std::size_t hash_value(const CoweightSim& lambda) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  };
  for (int v : lambda.a) mix(v);
  mix(lambda.c);
  return h;
}

}  // namespace wstrata
