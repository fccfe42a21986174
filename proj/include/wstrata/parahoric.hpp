#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wstrata/ext_element.hpp"

namespace wstrata {

// Parahoric level structure: a subset J of the affine index set {0..g}.
// NOTE the reversed convention used throughout: W_J is generated by the
// simple reflections s_i with i NOT in J.  So J = {0..g} gives the trivial
// subgroup (Iwahori level) and J = {} gives the full affine Weyl group.
class ParahoricType {
 public:
  ParahoricType(int g, const std::vector<int>& indices);

  int rank() const { return g_; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  std::uint32_t mask() const { return mask_; }

  std::vector<int> indices() const;              // J, ascending
  std::vector<int> subgroup_generators() const;  // {0..g} \ J, ascending

  bool operator==(const ParahoricType&) const = default;

  static ParahoricType full(int g);                       // J = {0..g}
  static ParahoricType superspecial_pair(int g, int c);   // J = {c, g-c}
  static std::vector<ParahoricType> all(int g);           // 2^(g+1) subsets, by mask

  std::string render() const;  // "0,2" (empty string for J = {})

 private:
  int g_;
  std::uint32_t mask_;
};

// Membership in W_J: grading zero and reduced-word support disjoint from J.
bool in_parahoric_subgroup(const GroupContext&, const ParahoricType& J, const ExtElement& x);

// Membership in the right coset W_J * tau.
bool in_parahoric_tau_coset(const GroupContext&, const ParahoricType& J, const ExtElement& x);

// Unique minimal-length element of the double coset W_J x W_K, found by
// stripping left descents outside J and right descents outside K.
ExtElement double_coset_min(const GroupContext&, const ParahoricType& J, const ParahoricType& K,
                            ExtElement x);

}  // namespace wstrata
