#include "wstrata/strata.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "wstrata/bruhat.hpp"
#include "wstrata/text_format.hpp"

namespace wstrata {

bool valid_sequence(const ElementarySequence& es) {
  if (es.psi.empty() || es.psi[0] != 0) return false;
  for (std::size_t i = 1; i < es.psi.size(); ++i) {
    const int step = es.psi[i] - es.psi[i - 1];
    if (step < 0 || step > 1) return false;
  }
  return true;
}

std::string render_sequence(const ElementarySequence& es) {
  std::ostringstream out;
  out << '(';
  for (int i = 1; i <= es.rank(); ++i) {
    if (i > 1) out << ',';
    out << es.psi[static_cast<std::size_t>(i)];
  }
  out << ')';
  return out.str();
}

FinalType final_type(const ElementarySequence& es) {
  if (!valid_sequence(es)) throw std::invalid_argument("invalid elementary sequence");
  const int g = es.rank();
  FinalType ft;
  ft.nu.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  for (int i = 0; i <= g; ++i) {
    ft.nu[static_cast<std::size_t>(i)] = es.psi[static_cast<std::size_t>(i)];
    ft.nu[static_cast<std::size_t>(2 * g - i)] = es.psi[static_cast<std::size_t>(i)] + g - i;
  }
  return ft;
}

namespace {

// The set of absolute values the window negates, read off a final element.
std::set<int> negated_values(const SignedPermutation& w) {
  std::set<int> neg;
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w.apply(i);
    if (v < 0) neg.insert(-v);
  }
  return neg;
}

// The unique final window for a given negated-value set: the kept values
// ascending, then the negated ones ascending as integers.
SignedPermutation final_window(int g, const std::set<int>& neg) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(g));
  for (int k = 1; k <= g; ++k)
    if (!neg.count(k)) w.push_back(k);
  for (int k = g; k >= 1; --k)
    if (neg.count(k)) w.push_back(-k);
  return SignedPermutation(std::move(w));
}

}  // namespace

bool is_final_element(const GroupContext& ctx, const SignedPermutation& w) {
  if (w.rank() != ctx.rank()) return false;
  return w == final_window(ctx.rank(), negated_values(w));
}

ElementarySequence sequence_from_final(const GroupContext& ctx, const SignedPermutation& w) {
  if (!is_final_element(ctx, w)) throw std::invalid_argument("element is not final");
  const std::set<int> neg = negated_values(w);
  ElementarySequence es;
  es.psi.assign(static_cast<std::size_t>(ctx.rank()) + 1, 0);
  for (int i = 1; i <= ctx.rank(); ++i)
    es.psi[static_cast<std::size_t>(i)] =
        es.psi[static_cast<std::size_t>(i) - 1] + (neg.count(i) ? 1 : 0);
  return es;
}

SignedPermutation final_from_sequence(const GroupContext& ctx, const ElementarySequence& es) {
  if (es.rank() != ctx.rank() || !valid_sequence(es))
    throw std::invalid_argument("invalid elementary sequence");
  std::set<int> neg;
  for (int i = 1; i <= ctx.rank(); ++i)
    if (es.psi[static_cast<std::size_t>(i)] == es.psi[static_cast<std::size_t>(i) - 1] + 1)
      neg.insert(i);
  return final_window(ctx.rank(), neg);
}

int p_rank(const ElementarySequence& es) {
  int best = 0;
  for (int i = 1; i <= es.rank(); ++i)
    if (es.psi[static_cast<std::size_t>(i)] == i) best = i;
  return best;
}

int a_number(const ElementarySequence& es) {
  return es.rank() - es.psi[static_cast<std::size_t>(es.rank())];
}

std::vector<int> canonical_full_type(const ElementarySequence& es) {
  const FinalType ft = final_type(es);
  const int n = 2 * es.rank();
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> work = {0, n};
  in[0] = in[static_cast<std::size_t>(n)] = 1;
  while (!work.empty()) {
    const int d = work.back();
    work.pop_back();
    for (int next : {ft.nu[static_cast<std::size_t>(d)], n - d}) {
      if (!in[static_cast<std::size_t>(next)]) {
        in[static_cast<std::size_t>(next)] = 1;
        work.push_back(next);
      }
    }
  }
  std::vector<int> type;
  for (int d = 0; d <= n; ++d)
    if (in[static_cast<std::size_t>(d)]) type.push_back(d);
  return type;
}

ParahoricType canonical_type(const GroupContext& ctx, const ElementarySequence& es) {
  std::vector<int> lower;
  for (int d : canonical_full_type(es))
    if (d <= ctx.rank()) lower.push_back(d);
  return ParahoricType(ctx.rank(), lower);
}

bool in_superspecial_union(const AdmSet& adm, int id) {
  const GroupContext& ctx = adm.context();
  for (int c = 0; 2 * c <= ctx.rank(); ++c)
    if (in_parahoric_tau_coset(ctx, ParahoricType::superspecial_pair(ctx.rank(), c),
                               adm.element(id)))
      return true;
  return false;
}

StratumReport classify_stratum(const AdmSet& adm, const ParahoricType& j, int id) {
  const GroupContext& ctx = adm.context();
  StratumReport rep{j, adm.min_rep_id(j, id), {}, {}, true, 0, 0};
  for (int v = 0; v < adm.size(); ++v)
    if (adm.min_rep_id(j, v) == rep.min_rep_id) rep.member_ids.push_back(v);
  rep.min_length = adm.length(rep.member_ids.front());
  rep.max_length = rep.min_length;
  for (int v : rep.member_ids) {
    rep.min_length = std::min(rep.min_length, adm.length(v));
    rep.max_length = std::max(rep.max_length, adm.length(v));
    if (!in_superspecial_union(adm, v)) rep.supersingular = false;
  }
  for (int c = 0; 2 * c <= ctx.rank(); ++c) {
    const ParahoricType pair = ParahoricType::superspecial_pair(ctx.rank(), c);
    bool all = true;
    for (int v : rep.member_ids)
      if (!in_parahoric_tau_coset(ctx, pair, adm.element(v))) {
        all = false;
        break;
      }
    if (all) rep.c_superspecial.push_back(c);
  }
  return rep;
}

std::vector<StratumReport> classify_all(const AdmSet& adm, const ParahoricType& j) {
  std::vector<StratumReport> out;
  for (const AdmBlock& block : adm.blocks(j)) {
    StratumReport rep = classify_stratum(adm, j, block.min_rep_id);
    if (rep.member_ids != block.member_ids)
      throw std::logic_error("block membership disagrees with classification");
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<int> c_superspecial_existing(const AdmSet& adm, const ParahoricType& j) {
  std::set<int> found;
  for (const StratumReport& rep : classify_all(adm, j))
    found.insert(rep.c_superspecial.begin(), rep.c_superspecial.end());
  return {found.begin(), found.end()};
}

std::vector<std::pair<int, int>> nonsuperspecial_witnesses(const AdmSet& adm,
                                                           const ParahoricType& j, int id) {
  const GroupContext& ctx = adm.context();
  const StratumReport rep = classify_stratum(adm, j, id);
  if (!rep.c_superspecial.empty())
    throw std::invalid_argument("witnesses are defined only for non-superspecial blocks");
  const ExtElement tau0 = tau(ctx);
  std::vector<std::pair<int, int>> out;
  for (int c = 0; 2 * c <= ctx.rank(); ++c) {
    int witness = -1;
    for (int lower : {c, ctx.rank() - c}) {
      const std::optional<int> ref_id = adm.id_of(simple_reflection(ctx, lower) * tau0);
      if (!ref_id) continue;
      for (int v : rep.member_ids)
        if (adm.leq(*ref_id, v)) {
          if (witness < 0 || v < witness) witness = v;
          break;
        }
    }
    out.emplace_back(c, witness);
  }
  return out;
}

std::vector<EoRow> eo_rows(const AdmSet& adm) {
  const GroupContext& ctx = adm.context();
  const ExtElement tau0 = tau(ctx);
  std::vector<EoRow> rows;
  for (const SignedPermutation& w : final_elements(ctx)) {
    EoRow row{w,
              finite_reduced_word(ctx, w),
              sequence_from_final(ctx, w),
              0,
              ParahoricType::full(ctx.rank()),
              {},
              0,
              false,
              {}};
    row.length = static_cast<int>(row.final_word.size());
    row.full_type = canonical_full_type(row.psi);
    row.j = canonical_type(ctx, row.psi);
    const std::optional<int> id = adm.id_of(ExtElement::from_finite(w) * tau0);
    if (id) {
      const int min_id = adm.min_rep_id(row.j, *id);
      bool strict = min_id == *id;
      for (int v = 0; v < adm.size(); ++v) {
        if (adm.min_rep_id(row.j, v) != min_id) continue;
        row.member_ids.push_back(v);
        if (v != *id && adm.length(v) <= adm.length(*id)) strict = false;
      }
      row.block_size = static_cast<int>(row.member_ids.size());
      row.unique_min = strict;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void SuiteReport::fail(std::string counterexample) {
  pass = false;
  counterexamples.push_back(std::move(counterexample));
}

namespace {

std::string note_line(const std::string& text) { return text; }

// Order of x in the extended group; -1 if it exceeds the cap (infinite for
// our callers: a nontrivial translation).
int element_order(const GroupContext& ctx, const ExtElement& x, int cap = 16) {
  const ExtElement e = ExtElement::identity(ctx.rank());
  ExtElement p = x;
  for (int n = 1; n <= cap; ++n) {
    if (p == e) return n;
    p = p * x;
  }
  return -1;
}

// Bond order of the affine diagram: m(i,i+1) = 4 at both ends, 3 inside,
// m = 2 for non-adjacent pairs.  Rank one has a single infinite bond.
int expected_bond(int g, int i, int j) {
  if (j - i != 1) return 2;
  if (g == 1) return -1;  // infinite
  return (i == 0 || j == g) ? 4 : 3;
}

}  // namespace

SuiteReport verify_coxeter(const GroupContext& ctx) {
  SuiteReport rep;
  rep.suite = "coxeter";
  const int g = ctx.rank();
  for (int i = 0; i <= g; ++i) {
    const ExtElement s = simple_reflection(ctx, i);
    if (length(ctx, s) != 1) rep.fail("generator s" + std::to_string(i) + " has length != 1");
    if (element_order(ctx, s) != 2)
      rep.fail("generator s" + std::to_string(i) + " is not an involution");
  }
  for (int i = 0; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) {
      const int want = expected_bond(g, i, j);
      const ExtElement p = simple_reflection(ctx, i) * simple_reflection(ctx, j);
      if (want == -1) {
        // Infinite bond: the product must be a translation by a nonzero
        // vector, which has infinite order exactly.
        const bool translation = p.u.is_identity() && !(p.lambda == zero_coweight(g));
        if (!translation || element_order(ctx, p) != -1)
          rep.fail("bond s0 s1 is unexpectedly finite");
        continue;
      }
      if (element_order(ctx, p) != want)
        rep.fail("bond s" + std::to_string(i) + " s" + std::to_string(j) + " has wrong order");
    }
  const ExtElement tau0 = tau(ctx);
  if (length(ctx, tau0) != 0) rep.fail("base element has nonzero length");
  const ExtElement tau_inv = tau0.inverse();
  for (int i = 0; i <= g; ++i)
    if (!(tau0 * simple_reflection(ctx, i) * tau_inv == simple_reflection(ctx, g - i)))
      rep.fail("conjugation by the base element does not send s" + std::to_string(i) + " to s" +
               std::to_string(g - i));
  const ExtElement tmu = ExtElement::translation(minuscule_coweight(g));
  CoweightSim flipped = act(ctx.tau_finite_part(), minuscule_coweight(g));
  if (!(tau0 * tmu * tau_inv == ExtElement::translation(flipped)))
    rep.fail("conjugation by the base element moves the minuscule translation wrongly");
  if (length(ctx, tmu) != g * (g + 1) / 2)
    rep.fail("minuscule translation has wrong length");
  rep.notes.push_back(note_line("generators: " + std::to_string(g + 1)));
  rep.notes.push_back(note_line("minuscule translation length: " + std::to_string(g * (g + 1) / 2)));
  return rep;
}

SuiteReport verify_perm_adm(const AdmSet& adm) {
  SuiteReport rep;
  rep.suite = "perm-adm";
  const GroupContext& ctx = adm.context();
  const int g = ctx.rank();
  for (int id = 0; id < adm.size(); ++id)
    if (!is_permissible(ctx, adm.element(id)))
      rep.fail("enumerated element fails the alcove test: " + render_element(ctx, adm.element(id)));
  // Every alcove-permissible element has translation entries in {0,1}
  // (vertex 0 forces it), so the scan below is complete.
  std::unordered_set<ExtElement, ExtElementHash> in_adm;
  for (int id = 0; id < adm.size(); ++id) in_adm.insert(adm.element(id));
  std::size_t count = 0;
  for (const CoweightSim& lam : mu_orbit(ctx))
    for (const SignedPermutation& u : all_group_elements(ctx)) {
      const ExtElement x{lam, u};
      if (!is_permissible(ctx, x)) continue;
      ++count;
      if (!in_adm.count(x))
        rep.fail("alcove-permissible element missing from the subword closure: " +
                 render_element(ctx, x));
    }
  if (count != static_cast<std::size_t>(adm.size()))
    rep.fail("alcove-permissible count " + std::to_string(count) + " != subword-closure count " +
             std::to_string(adm.size()));
  rep.notes.push_back(note_line("elements: " + std::to_string(adm.size())));
  rep.notes.push_back(note_line("scanned candidates: " +
                                std::to_string((std::size_t{1} << g) * ctx.group_order())));
  return rep;
}

SuiteReport verify_structural(const GroupContext& ctx) {
  SuiteReport rep;
  rep.suite = "lemma3";
  const int g = ctx.rank();
  const std::vector<SignedPermutation> finals = final_elements(ctx);
  for (int c = 0; 2 * c <= g; ++c) {
    // (a) Final elements inside the parahoric subgroup of type {c, g-c} are
    // exactly the embedded final elements of the rank-c group.
    std::set<std::vector<int>> actual;
    for (const SignedPermutation& w : finals) {
      const std::vector<int> word = finite_reduced_word(ctx, w);
      const bool inside = std::none_of(word.begin(), word.end(),
                                       [&](int i) { return i == c || i == g - c; });
      if (inside) actual.insert(w.window());
    }
    std::set<std::vector<int>> expected;
    if (c == 0) {
      expected.insert(SignedPermutation::identity(g).window());
    } else {
      const GroupContext sub(c);
      for (const SignedPermutation& v : final_elements(sub))
        expected.insert(embed_element(ctx, c, v).window());
    }
    if (actual != expected)
      rep.fail("final-element intersection mismatch at c=" + std::to_string(c));

    // (b) The generator set splits into three mutually commuting blocks with
    // the bond pattern of W_c x S_{g-2c} x W_c, swapped by i -> g-i.
    std::vector<int> block_a, block_m, block_b;
    for (int i = 0; i <= g; ++i) {
      if (i == c || i == g - c) continue;
      if (i < c)
        block_a.push_back(i);
      else if (i < g - c)
        block_m.push_back(i);
      else
        block_b.push_back(i);
    }
    const auto block_of = [&](int i) {
      if (i < c) return 0;
      if (i < g - c) return 1;
      return 2;
    };
    std::vector<int> gens = block_a;
    gens.insert(gens.end(), block_m.begin(), block_m.end());
    gens.insert(gens.end(), block_b.begin(), block_b.end());
    for (std::size_t p = 0; p < gens.size(); ++p)
      for (std::size_t q = p + 1; q < gens.size(); ++q) {
        const int i = gens[p];
        const int j = gens[q];
        int want = block_of(i) != block_of(j) ? 2 : expected_bond(g, i, j);
        const int got =
            element_order(ctx, simple_reflection(ctx, i) * simple_reflection(ctx, j));
        if (got != want)
          rep.fail("bond s" + std::to_string(i) + " s" + std::to_string(j) +
                   " has order " + std::to_string(got) + ", expected " + std::to_string(want) +
                   " at c=" + std::to_string(c));
      }
    for (int i : block_a)
      if (ctx.frobenius(i) < g - c + 1 || ctx.frobenius(i) > g)
        rep.fail("diagram involution does not carry the left block onto the right one");
    for (int i : block_m)
      if (ctx.frobenius(i) <= c || ctx.frobenius(i) >= g - c)
        rep.fail("diagram involution does not preserve the middle block");

    // Closure order: (2^c c!)^2 (g-2c)!.
    std::uint64_t want_order = 1;
    for (int i = 1; i <= c; ++i) want_order *= 2ull * static_cast<std::uint64_t>(i);
    want_order *= want_order;
    for (int i = 2; i <= g - 2 * c; ++i) want_order *= static_cast<std::uint64_t>(i);
    if (want_order <= 100000) {
      std::vector<ExtElement> gen_elems;
      for (int i : gens) gen_elems.push_back(simple_reflection(ctx, i));
      const std::size_t got = subgroup_closure(ctx, gen_elems, 200000).size();
      if (got != want_order)
        rep.fail("parahoric subgroup at c=" + std::to_string(c) + " has order " +
                 std::to_string(got) + ", expected " + std::to_string(want_order));
    }
    rep.notes.push_back(note_line("c=" + std::to_string(c) + ": intersection size " +
                                  std::to_string(actual.size())));
  }
  return rep;
}

SuiteReport verify_existence(const AdmSet& adm) {
  SuiteReport rep;
  rep.suite = "lemma4";
  const GroupContext& ctx = adm.context();
  const int g = ctx.rank();
  for (const ParahoricType& j : ParahoricType::all(g)) {
    std::vector<int> want;
    for (int c = 0; 2 * c <= g; ++c)
      if (j.contains(c) && j.contains(g - c)) want.push_back(c);
    if (c_superspecial_existing(adm, j) != want)
      rep.fail("superspecial levels mismatch at J={" + j.render() + "}");
  }
  rep.notes.push_back(note_line("types swept: " + std::to_string(std::size_t{1} << (g + 1))));
  return rep;
}

SuiteReport verify_ss_iff_ssp(const AdmSet& adm) {
  SuiteReport rep;
  rep.suite = "thm45";
  const GroupContext& ctx = adm.context();
  const int g = ctx.rank();
  std::size_t supersingular_blocks = 0;
  for (const ParahoricType& j : ParahoricType::all(g)) {
    for (const AdmBlock& block : adm.blocks(j)) {
      const StratumReport cls = classify_stratum(adm, j, block.min_rep_id);
      if (cls.supersingular) ++supersingular_blocks;
      if (cls.supersingular && cls.c_superspecial.empty())
        rep.fail("supersingular block without a superspecial level: J={" + j.render() +
                 "}, min " + render_element(ctx, adm.element(cls.min_rep_id)));
      if (!cls.c_superspecial.empty() && !cls.supersingular)
        rep.fail("superspecial block that is not supersingular: J={" + j.render() + "}, min " +
                 render_element(ctx, adm.element(cls.min_rep_id)));
      if (cls.c_superspecial.empty()) {
        for (const auto& [c, witness] : nonsuperspecial_witnesses(adm, j, block.min_rep_id))
          if (witness < 0)
            rep.fail("no member above s_c tau or s_{g-c} tau for c=" + std::to_string(c) +
                     " at J={" + j.render() + "}, min " +
                     render_element(ctx, adm.element(cls.min_rep_id)));
      }
    }
  }
  // Report the full-level (trivial W_J) supersingular strata explicitly.
  std::vector<std::string> iwahori;
  for (const StratumReport& cls : classify_all(adm, ParahoricType::full(g)))
    if (cls.supersingular)
      iwahori.push_back(render_element(ctx, adm.element(cls.min_rep_id)));
  rep.notes.push_back(note_line("iwahori supersingular strata: " + std::to_string(iwahori.size())));
  for (const std::string& word : iwahori) rep.notes.push_back(note_line("  " + word));
  rep.notes.push_back(
      note_line("supersingular blocks across all types: " + std::to_string(supersingular_blocks)));
  return rep;
}

SuiteReport verify_eo_match(const AdmSet& adm) {
  SuiteReport rep;
  rep.suite = "eo";
  for (const EoRow& row : eo_rows(adm)) {
    std::string name = row.final_word.empty() ? "e" : "";
    for (std::size_t k = 0; k < row.final_word.size(); ++k)
      name += (k ? " s" : "s") + std::to_string(row.final_word[k]);
    if (row.block_size == 0)
      rep.fail("final element times the base element is not admissible: " + name);
    else if (!row.unique_min)
      rep.fail("final element is not the unique shortest member of its block: " + name);
    rep.notes.push_back(note_line(name + ": J={" + row.j.render() + "} block " +
                                  std::to_string(row.block_size)));
  }
  return rep;
}

}  // namespace wstrata
