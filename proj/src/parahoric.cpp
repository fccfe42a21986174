#include "wstrata/parahoric.hpp"

#include <stdexcept>

namespace wstrata {

ParahoricType::ParahoricType(int g, const std::vector<int>& indices) : g_(g), mask_(0) {
  if (g < 1) throw std::invalid_argument("rank out of range");
  for (int i : indices) {
    if (i < 0 || i > g) throw std::invalid_argument("parahoric index out of range");
    mask_ |= (1u << i);
  }
}

std::vector<int> ParahoricType::indices() const {
  std::vector<int> out;
  for (int i = 0; i <= g_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> ParahoricType::subgroup_generators() const {
  std::vector<int> out;
  for (int i = 0; i <= g_; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

ParahoricType ParahoricType::full(int g) {
  std::vector<int> all;
  for (int i = 0; i <= g; ++i) all.push_back(i);
  return ParahoricType(g, all);
}

ParahoricType ParahoricType::superspecial_pair(int g, int c) {
  if (c < 0 || 2 * c > g) throw std::invalid_argument("superspecial level needs 0 <= c <= g/2");
  return ParahoricType(g, {c, g - c});
}

std::vector<ParahoricType> ParahoricType::all(int g) {
  std::vector<ParahoricType> out;
  for (std::uint32_t mask = 0; mask < (1u << (g + 1)); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i <= g; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    out.emplace_back(g, idx);
  }
  return out;
}

std::string ParahoricType::render() const {
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

bool in_parahoric_subgroup(const GroupContext& ctx, const ParahoricType& J, const ExtElement& x) {
  if (J.rank() != ctx.rank()) throw std::invalid_argument("rank mismatch");
  if (x.omega() != 0) return false;
  for (int i : word_support(ctx, x))
    if (J.contains(i)) return false;
  return true;
}

bool in_parahoric_tau_coset(const GroupContext& ctx, const ParahoricType& J, const ExtElement& x) {
  return in_parahoric_subgroup(ctx, J, x * tau(ctx).inverse());
}

ExtElement double_coset_min(const GroupContext& ctx, const ParahoricType& J,
                            const ParahoricType& K, ExtElement x) {
  if (J.rank() != ctx.rank() || K.rank() != ctx.rank() || x.rank() != ctx.rank())
    throw std::invalid_argument("rank mismatch");
  const std::vector<int> left = J.subgroup_generators();
  const std::vector<int> right = K.subgroup_generators();
  int len = length(ctx, x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : left) {
      ExtElement cand = simple_reflection(ctx, i) * x;
      if (length(ctx, cand) < len) {
        x = std::move(cand);
        --len;
        changed = true;
      }
    }
    for (int i : right) {
      ExtElement cand = x * simple_reflection(ctx, i);
      if (length(ctx, cand) < len) {
        x = std::move(cand);
        --len;
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace wstrata
