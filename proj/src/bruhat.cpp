#include "wstrata/bruhat.hpp"

#include <stdexcept>

namespace wstrata {

namespace {

bool leq_impl(const GroupContext& ctx, const ExtElement& x, int lx, const ExtElement& y, int ly,
              BruhatMemo* memo) {
  if (lx > ly) return false;
  if (ly == 0) return x == y;
  if (lx == 0) return true;  // the length-zero element of the grading class is below everything
  if (memo) {
    auto it = memo->table.find({x, y});
    if (it != memo->table.end()) return it->second;
  }
  bool result = false;
  for (int i = 0; i <= ctx.rank(); ++i) {
    ExtElement sy = simple_reflection(ctx, i) * y;
    if (length(ctx, sy) >= ly) continue;
    ExtElement sx = simple_reflection(ctx, i) * x;
    if (length(ctx, sx) < lx)
      result = leq_impl(ctx, sx, lx - 1, sy, ly - 1, memo);
    else
      result = leq_impl(ctx, x, lx, sy, ly - 1, memo);
    break;
  }
  if (memo) memo->table.emplace(std::make_pair(x, y), result);
  return result;
}

}  // namespace

bool bruhat_leq(const GroupContext& ctx, const ExtElement& x, const ExtElement& y,
                BruhatMemo* memo) {
  if (x.rank() != ctx.rank() || y.rank() != ctx.rank())
    throw std::invalid_argument("rank mismatch in Bruhat comparison");
  if (x.omega() != y.omega()) return false;
  return leq_impl(ctx, x, length(ctx, x), y, length(ctx, y), memo);
}

}  // namespace wstrata
