#pragma once

#include <string>
#include <vector>

#include "wstrata/adm_set.hpp"
#include "wstrata/group_context.hpp"
#include "wstrata/parahoric.hpp"
#include "wstrata/signed_perm.hpp"

namespace wstrata {

// Nondecreasing psi : {0..g} -> Z>=0 with psi(0) = 0 and unit steps.  There
// are exactly 2^g of them; they index the same strata as the final elements.
struct ElementarySequence {
  std::vector<int> psi;  // psi[i] = value at i, size g+1
  int rank() const { return static_cast<int>(psi.size()) - 1; }
  bool operator==(const ElementarySequence&) const = default;
};

bool valid_sequence(const ElementarySequence&);
std::string render_sequence(const ElementarySequence&);  // "(0,1)"

// Extension nu : {0..2g} -> {0..g}: nu(i) = psi(i) for i <= g and
// nu(2g - i) = psi(i) + g - i.
struct FinalType {
  std::vector<int> nu;  // size 2g+1
  int rank() const { return (static_cast<int>(nu.size()) - 1) / 2; }
};

FinalType final_type(const ElementarySequence&);

// Mutually inverse bijections between final elements and sequences.
// Convention (frozen by the length identity and the rank-2 table): the set N
// of absolute values that w negates determines psi via
// psi(i) = |N  intersect  {1..i}|, so that length(w) = sum_i psi(i).
bool is_final_element(const GroupContext&, const SignedPermutation&);
ElementarySequence sequence_from_final(const GroupContext&, const SignedPermutation&);
SignedPermutation final_from_sequence(const GroupContext&, const ElementarySequence&);

// Largest i with psi(i) = i, and g - psi(g).
int p_rank(const ElementarySequence&);
int a_number(const ElementarySequence&);

// Smallest T containing {0, 2g} closed under d -> nu(d) and d -> 2g - d
// (ascending), and its lower half J = T intersect {0..g}.  J always
// contains 0 and g, and T is symmetric by construction.
std::vector<int> canonical_full_type(const ElementarySequence&);
ParahoricType canonical_type(const GroupContext&, const ElementarySequence&);

// One parahoric double-coset block of the admissible set, classified.
struct StratumReport {
  ParahoricType j;
  int min_rep_id;
  std::vector<int> member_ids;
  std::vector<int> c_superspecial;  // c in {0..g/2} with block inside W_{c,g-c} tau
  bool supersingular;               // every member inside the union over c
  int min_length;
  int max_length;
};

bool in_superspecial_union(const AdmSet&, int id);
StratumReport classify_stratum(const AdmSet&, const ParahoricType& j, int id);
std::vector<StratumReport> classify_all(const AdmSet&, const ParahoricType& j);

// All c in {0..g/2} such that some block at level J is c-superspecial;
// equals {c : c in J and g-c in J} (the content of the existence sweep).
std::vector<int> c_superspecial_existing(const AdmSet&, const ParahoricType& j);

// For a block with empty c_superspecial: per c, some member lying above
// s_c tau or s_{g-c} tau in Bruhat order; -1 marks a missing witness (a
// falsification, surfaced by the verifiers).
std::vector<std::pair<int, int>> nonsuperspecial_witnesses(const AdmSet&, const ParahoricType& j,
                                                           int id);

// Row of the stratum-matching table: one per final element, in id order.
struct EoRow {
  SignedPermutation final;
  std::vector<int> final_word;
  ElementarySequence psi;
  int length;
  ParahoricType j;
  std::vector<int> full_type;
  int block_size;
  bool unique_min;  // w tau is the strictly shortest member of its block
  std::vector<int> member_ids;  // the block of w tau at level j, ascending
};

std::vector<EoRow> eo_rows(const AdmSet&);

// Verification suites.  Exit-code mapping lives in the CLI: pass -> 0,
// fail -> 1.  Notes are deterministic human-readable lines; counterexamples
// carry canonical words.
struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> counterexamples;

  void fail(std::string counterexample);
};

SuiteReport verify_coxeter(const GroupContext&);        // suite "coxeter"
SuiteReport verify_perm_adm(const AdmSet&);             // suite "perm-adm"
SuiteReport verify_structural(const GroupContext&);     // suite "lemma3"
SuiteReport verify_existence(const AdmSet&);            // suite "lemma4"
SuiteReport verify_ss_iff_ssp(const AdmSet&);           // suite "thm45"
SuiteReport verify_eo_match(const AdmSet&);             // suite "eo"

}  // namespace wstrata
