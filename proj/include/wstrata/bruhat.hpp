#pragma once

#include <unordered_map>
#include <utility>

#include "wstrata/ext_element.hpp"

namespace wstrata {

// Session-scoped memo table for Bruhat comparisons.  Not thread-safe; use
// one per worker.
struct BruhatMemo {
  struct KeyHash {
    std::size_t operator()(const std::pair<ExtElement, ExtElement>& p) const {
      return hash_value(p.first) * 0x100000001b3ull ^ hash_value(p.second);
    }
  };
  std::unordered_map<std::pair<ExtElement, ExtElement>, bool, KeyHash> table;
};

// Bruhat order on the extended affine Weyl group: false whenever the
// Omega-gradings differ; otherwise the standard descent recursion
//   x <= y  iff  (s x <= s y when s x < x, else x <= s y)
// for any left descent s of y.
bool bruhat_leq(const GroupContext&, const ExtElement& x, const ExtElement& y,
                BruhatMemo* memo = nullptr);

}  // namespace wstrata
