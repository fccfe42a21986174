#include "wstrata/adm_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "wstrata/errors.hpp"

namespace wstrata {

namespace {

constexpr int kMaxAdmRank = 6;

// Lexicographic-then-structural key for deterministic id assignment.
bool word_key_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<CoweightSim> mu_orbit(const GroupContext& ctx) {
  const int g = ctx.rank();
  std::vector<CoweightSim> orbit;
  orbit.reserve(std::size_t{1} << g);
  for (int mask = 0; mask < (1 << g); ++mask) {
    CoweightSim lam = zero_coweight(g);
    lam.c = 1;
    for (int i = 0; i < g; ++i)
      if (mask & (1 << i)) lam.a[static_cast<std::size_t>(i)] = 1;
    orbit.push_back(std::move(lam));
  }
  std::sort(orbit.begin(), orbit.end(),
            [](const CoweightSim& x, const CoweightSim& y) { return x.a < y.a; });
  return orbit;
}

std::vector<int> vertex_displacement_doubled(const GroupContext& ctx, const ExtElement& x,
                                             int j) {
  const int g = ctx.rank();
  if (x.rank() != g) throw std::invalid_argument("element rank mismatch");
  if (j < 0 || j > g) throw std::invalid_argument("vertex index out of range");
  // Doubled coordinates make every entry an integer: the centered
  // translation part contributes 2 a_i - c, the doubled vertex has first j
  // entries 1.  The finite part permutes coordinates with signs, which the
  // centered picture keeps linear.
  std::vector<int> disp(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i)
    disp[static_cast<std::size_t>(i)] =
        2 * x.lambda.a[static_cast<std::size_t>(i)] - x.lambda.c - ((i < j) ? 1 : 0);
  for (int i = 1; i <= g; ++i) {
    const int vi = (i <= j) ? 1 : 0;
    const int ui = x.u.apply(i);
    const int pos = std::abs(ui);
    disp[static_cast<std::size_t>(pos - 1)] += (ui > 0) ? vi : -vi;
  }
  return disp;
}

bool is_permissible(const GroupContext& ctx, const ExtElement& x) {
  if (x.omega() != 1) return false;
  for (int j = 0; j <= ctx.rank(); ++j)
    for (int d : vertex_displacement_doubled(ctx, x, j))
      if (d < -1 || d > 1) return false;
  return true;
}

AdmSet::AdmSet(GroupContext ctx, std::vector<ExtElement> elements,
               std::vector<std::vector<int>> words)
    : ctx_(std::move(ctx)),
      elements_(std::move(elements)),
      words_(std::move(words)),
      rel_(std::make_unique<Relations>()) {
  parts_.reserve(elements_.size());
  const ExtElement tau_inv = tau(ctx_).inverse();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    parts_.push_back(tau_inv * elements_[i]);
    id_by_element_.emplace(elements_[i], static_cast<int>(i));
    id_by_part_.emplace(parts_.back(), static_cast<int>(i));
  }
  const int top_len = ctx_.rank() * (ctx_.rank() + 1) / 2;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (static_cast<int>(words_[i].size()) == top_len)
      maximal_ids_.push_back(static_cast<int>(i));
  verify_structure();
}

void AdmSet::verify_structure() const {
  // Sorted by (length, word), no duplicates.
  for (std::size_t i = 1; i < words_.size(); ++i)
    if (!word_key_less(words_[i - 1], words_[i]))
      throw std::logic_error("admissible-set ids are not sorted");
  // Exactly one length-zero element, and it is the base element.
  if (words_.empty() || !words_[0].empty())
    throw std::logic_error("admissible set lacks the length-zero base element");
  if (words_.size() > 1 && words_[1].empty())
    throw std::logic_error("admissible set has two length-zero elements");
  if (!(elements_[0] == tau(ctx_)))
    throw std::logic_error("admissible-set base element is not the length-zero one");
  // The maxima are exactly the 2^g extreme translations.
  const std::vector<CoweightSim> orbit = mu_orbit(ctx_);
  if (maximal_ids_.size() != orbit.size())
    throw std::logic_error("admissible set has the wrong number of maximal elements");
  std::vector<CoweightSim> tops;
  for (int id : maximal_ids_) {
    const ExtElement& x = elements_[static_cast<std::size_t>(id)];
    if (!x.u.is_identity())
      throw std::logic_error("maximal admissible element is not a translation");
    tops.push_back(x.lambda);
  }
  std::sort(tops.begin(), tops.end(),
            [](const CoweightSim& a, const CoweightSim& b) { return a.a < b.a; });
  for (std::size_t i = 0; i < tops.size(); ++i)
    if (!(tops[i] == orbit[i]))
      throw std::logic_error("maximal admissible elements do not match the coweight orbit");
}

AdmSet AdmSet::enumerate(const GroupContext& ctx) {
  const int g = ctx.rank();
  if (g > kMaxAdmRank)
    throw ResourceCapError("admissible-set enumeration is capped at rank " +
                           std::to_string(kMaxAdmRank));

  std::unordered_map<ExtElement, int, ExtElementHash> seen;  // element -> intern id
  std::vector<ExtElement> found;
  const auto intern = [&](const ExtElement& x) {
    auto [it, fresh] = seen.emplace(x, static_cast<int>(found.size()));
    if (fresh) found.push_back(x);
    return it->second;
  };

  // Subword products of one reduced word per extreme translation: the set of
  // products of subwords of the first p letters satisfies
  //   S_0 = {tau^k},  S_{p+1} = S_p  union  S_p * s_{letter p},
  // and S_L is exactly the lower Bruhat interval of that translation.
  for (const CoweightSim& lam : mu_orbit(ctx)) {
    const ExtElement top = ExtElement::translation(lam);
    const CanonicalWord w = reduced_word(ctx, top);

    std::vector<int> level = {intern(tau_power(ctx, w.tau_power))};
    for (int letter : w.letters) {
      const ExtElement s = simple_reflection(ctx, letter);
      std::vector<int> next = level;
      for (int id : level) {
        const ExtElement prod = found[static_cast<std::size_t>(id)] * s;
        next.push_back(intern(prod));
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      level = std::move(next);
    }
  }

  std::vector<std::vector<int>> words;
  words.reserve(found.size());
  for (const ExtElement& x : found) words.push_back(reduced_word(ctx, x).letters);
  std::vector<int> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return word_key_less(words[static_cast<std::size_t>(a)], words[static_cast<std::size_t>(b)]);
  });
  std::vector<ExtElement> elements;
  std::vector<std::vector<int>> sorted_words;
  elements.reserve(found.size());
  sorted_words.reserve(found.size());
  for (int idx : order) {
    elements.push_back(std::move(found[static_cast<std::size_t>(idx)]));
    sorted_words.push_back(std::move(words[static_cast<std::size_t>(idx)]));
  }
  return AdmSet(ctx, std::move(elements), std::move(sorted_words));
}

AdmSet AdmSet::from_stored(const GroupContext& ctx, const std::vector<std::vector<int>>& words,
                           const std::vector<int>& omegas,
                           const std::vector<std::pair<int, int>>& hasse) {
  if (words.size() != omegas.size())
    throw FormatError("stored element table is inconsistent");
  std::vector<ExtElement> elements;
  elements.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    CanonicalWord w;
    w.tau_power = omegas[i];
    w.letters = words[i];
    ExtElement x = element_from_word(ctx, w);
    if (wstrata::length(ctx, x) != static_cast<int>(words[i].size()))
      throw FormatError("stored word is not reduced");
    if (reduced_word(ctx, x).letters != words[i])
      throw FormatError("stored word is not in canonical form");
    elements.push_back(std::move(x));
  }
  std::vector<std::vector<int>> copy = words;
  try {
    AdmSet set(ctx, std::move(elements), std::move(copy));
    for (int id = 0; id < set.size(); ++id)
      if (!is_permissible(ctx, set.element(id)))
        throw FormatError("stored element fails the alcove test");
    for (const auto& [lo, hi] : hasse) {
      if (lo < 0 || hi < 0 || lo >= set.size() || hi >= set.size())
        throw FormatError("stored cover edge is out of range");
      if (set.length(hi) != set.length(lo) + 1)
        throw FormatError("stored cover edge has the wrong length gap");
    }
    set.adopt_relations(hasse);
    return set;
  } catch (const std::logic_error& e) {
    throw FormatError(std::string("stored element table is invalid: ") + e.what());
  }
}

std::optional<int> AdmSet::id_of(const ExtElement& x) const {
  auto it = id_by_element_.find(x);
  if (it == id_by_element_.end()) return std::nullopt;
  return it->second;
}

void AdmSet::build_relations() const {
  std::call_once(rel_->once, [this] {
    const int n = size();
    std::vector<Bitset> below;
    below.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) below.emplace_back(static_cast<std::size_t>(n));

    // Left multiplication table on grading-zero parts: lift[i][x] is the id
    // of s_i * part(x) when that product stays in the set, else -1.
    const int g = ctx_.rank();
    std::vector<std::vector<int>> lift(static_cast<std::size_t>(g) + 1,
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i <= g; ++i) {
      const ExtElement s = simple_reflection(ctx_, i);
      for (int x = 0; x < n; ++x) {
        auto it = id_by_part_.find(s * parts_[static_cast<std::size_t>(x)]);
        if (it != id_by_part_.end()) lift[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] = it->second;
      }
    }

    // Ids ascend by length, so the recursion targets are already filled:
    //   x <= y  iff  (s x <= s y if s x < x, else x <= s y)
    // for s a left descent of y; taking s = first canonical letter of y.
    for (int y = 0; y < n; ++y) {
      Bitset& row = below[static_cast<std::size_t>(y)];
      if (words_[static_cast<std::size_t>(y)].empty()) {
        row.set(static_cast<std::size_t>(y));
        continue;
      }
      const int s = words_[static_cast<std::size_t>(y)].front();
      const int sy = lift[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)];
      if (sy < 0 || length(sy) != length(y) - 1)
        throw std::logic_error("canonical first letter is not a descent");
      const Bitset& sub = below[static_cast<std::size_t>(sy)];
      for (int x = 0; x < n; ++x) {
        const int sx = lift[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
        const bool sx_down = sx >= 0 && length(sx) == length(x) - 1;
        const int probe = sx_down ? sx : x;
        if (probe >= 0 && sub.test(static_cast<std::size_t>(probe)))
          row.set(static_cast<std::size_t>(x));
      }
    }

    // Covers: comparable with length gap exactly one (the order is graded).
    std::vector<std::pair<int, int>> hasse;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        if (length(y) == length(x) + 1 && below[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(x)))
          hasse.emplace_back(x, y);
    std::sort(hasse.begin(), hasse.end());

    rel_->below = std::move(below);
    rel_->hasse = std::move(hasse);
    rel_->built = true;
  });
}

void AdmSet::adopt_relations(std::vector<std::pair<int, int>> hasse) const {
  std::call_once(rel_->once, [this, &hasse] {
    const int n = size();
    std::vector<Bitset> below;
    below.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      below.emplace_back(static_cast<std::size_t>(n));
      below.back().set(static_cast<std::size_t>(i));
    }
    std::sort(hasse.begin(), hasse.end());
    // Ids ascend with length, so accumulating rows in id order closes the
    // relation transitively in one pass.
    for (const auto& [lo, hi] : hasse)
      below[static_cast<std::size_t>(hi)].or_with(below[static_cast<std::size_t>(lo)]);
    rel_->below = std::move(below);
    rel_->hasse = std::move(hasse);
    rel_->built = true;
  });
}

bool AdmSet::leq(int a, int b) const {
  build_relations();
  return rel_->below[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a));
}

const std::vector<std::pair<int, int>>& AdmSet::hasse_edges() const {
  build_relations();
  return rel_->hasse;
}

int AdmSet::min_rep_id(const ParahoricType& J, int id) const {
  // Strip the grading: x = (x tau^{-1}) tau, reduce the finite-type factor
  // in W_J \ W / W_J, then restore tau.  Descent stripping on the affine
  // element directly is equivalent and avoids splitting; do that.
  const std::vector<int> gens = J.subgroup_generators();
  ExtElement cur = elements_[static_cast<std::size_t>(id)];
  int len = length(id);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : gens) {
      const ExtElement s = simple_reflection(ctx_, i);
      ExtElement left = s * cur;
      if (wstrata::length(ctx_, left) < len) {
        cur = std::move(left);
        --len;
        changed = true;
        continue;
      }
      ExtElement right = cur * s;
      if (wstrata::length(ctx_, right) < len) {
        cur = std::move(right);
        --len;
        changed = true;
      }
    }
  }
  auto it = id_by_element_.find(cur);
  if (it == id_by_element_.end())
    throw std::logic_error("double-coset minimum escaped the admissible set");
  return it->second;
}

std::vector<AdmBlock> AdmSet::blocks(const ParahoricType& J) const {
  std::unordered_map<int, std::vector<int>> by_min;
  for (int id = 0; id < size(); ++id) by_min[min_rep_id(J, id)].push_back(id);
  std::vector<AdmBlock> out;
  out.reserve(by_min.size());
  for (auto& [min_id, members] : by_min) {
    std::sort(members.begin(), members.end());
    out.push_back(AdmBlock{min_id, std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const AdmBlock& a, const AdmBlock& b) { return a.min_rep_id < b.min_rep_id; });
  return out;
}

}  // namespace wstrata
