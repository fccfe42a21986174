#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wstrata/bitset.hpp"
#include "wstrata/ext_element.hpp"
#include "wstrata/parahoric.hpp"

namespace wstrata {

// Weyl-orbit of the dominant minuscule coweight: the 2^g vectors in {0,1}^g
// with similitude 1, sorted lexicographically.
std::vector<CoweightSim> mu_orbit(const GroupContext&);

// Displacement x(a_j) - a_j at the base-alcove vertex a_j = ((1/2)^j, 0^(g-j)),
// computed in the similitude-centered picture (translations contribute
// lambda - (c/2) * (1,...,1)) and returned doubled so every entry is exact.
std::vector<int> vertex_displacement_doubled(const GroupContext&, const ExtElement&, int j);

// Alcove-displacement test: grading one, and every vertex displacement lies
// in the cube [-1/2, 1/2]^g.
bool is_permissible(const GroupContext&, const ExtElement&);

struct AdmBlock {
  int min_rep_id;
  std::vector<int> member_ids;
};

// The admissible set: the union of Bruhat intervals below the 2^g extreme
// translations t^lambda, lambda in the orbit of mu.  Elements carry dense
// ids 0..size()-1 sorted by (length, canonical word lexicographic); id 0 is
// always the length-zero element.
//
// Enumeration evaluates every subword of a fixed reduced word of each
// extreme translation (the subword property makes this exactly the lower
// interval).  The order relation and cover edges are materialized lazily on
// first use and are safe for concurrent readers afterwards.
class AdmSet {
 public:
  static AdmSet enumerate(const GroupContext&);  // capped at g <= 6

  // Rebuild from previously stored words plus cover edges (the cache path).
  // Re-derives the elements, re-checks lengths, the unique length-zero
  // element, the 2^g extreme translations and permissibility of every
  // element; throws FormatError on any mismatch.
  static AdmSet from_stored(const GroupContext&, const std::vector<std::vector<int>>& words,
                            const std::vector<int>& omegas,
                            const std::vector<std::pair<int, int>>& hasse);

  const GroupContext& context() const { return ctx_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const ExtElement& element(int id) const { return elements_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& word(int id) const { return words_[static_cast<std::size_t>(id)]; }
  int length(int id) const { return static_cast<int>(words_[static_cast<std::size_t>(id)].size()); }
  std::optional<int> id_of(const ExtElement&) const;
  int tau_id() const { return 0; }
  const std::vector<int>& maximal_ids() const { return maximal_ids_; }

  bool leq(int a, int b) const;  // Bruhat order
  const std::vector<std::pair<int, int>>& hasse_edges() const;  // covers (lower, upper)

  // Partition into double cosets W_J x W_J; blocks sorted by their minimal
  // representative's id, members ascending.
  std::vector<AdmBlock> blocks(const ParahoricType& J) const;
  int min_rep_id(const ParahoricType& J, int id) const;

 private:
  AdmSet(GroupContext ctx, std::vector<ExtElement> elements, std::vector<std::vector<int>> words);

  void verify_structure() const;
  void build_relations() const;
  void adopt_relations(std::vector<std::pair<int, int>> hasse) const;

  GroupContext ctx_;
  std::vector<ExtElement> elements_;             // tau * part, ids sorted by (length, word)
  std::vector<ExtElement> parts_;                // grading-zero parts tau^{-1} x
  std::vector<std::vector<int>> words_;          // canonical letters of the parts
  std::unordered_map<ExtElement, int, ExtElementHash> id_by_element_;
  std::unordered_map<ExtElement, int, ExtElementHash> id_by_part_;
  std::vector<int> maximal_ids_;

  struct Relations {
    std::once_flag once;
    bool built = false;
    std::vector<Bitset> below;  // below[y] = bitset of {x : x <= y}
    std::vector<std::pair<int, int>> hasse;
  };
  std::unique_ptr<Relations> rel_;
};

}  // namespace wstrata
