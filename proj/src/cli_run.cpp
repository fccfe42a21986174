#include "wstrata/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "wstrata/cache.hpp"
#include "wstrata/errors.hpp"
#include "wstrata/strata.hpp"
#include "wstrata/text_format.hpp"

namespace wstrata {

namespace {

using nlohmann::json;

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char ch : raw) {
    quoted += ch;
    if (ch == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  row += "\r\n";
  return row;
}

std::optional<std::filesystem::path> cache_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("STRATA_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  return std::nullopt;
}

json element_record(const AdmSet& adm, int id) {
  json rec;
  rec["id"] = id;
  rec["length"] = adm.length(id);
  rec["omegaPower"] = adm.element(id).omega();
  rec["word"] = adm.word(id);
  rec["text"] = render_element(adm.context(), adm.element(id));
  return rec;
}

void emit_json(std::ostream& out, const json& payload) { out << payload.dump(2) << "\n"; }

int cmd_info(int g, std::ostream& out) {
  const GroupContext ctx(g);
  json payload;
  payload["kind"] = "info";
  payload["g"] = g;
  payload["affineGenerators"] = g + 1;
  payload["finiteGroupOrder"] = ctx.group_order();
  payload["positiveRoots"] = g * g;
  payload["finalElements"] = std::uint64_t{1} << g;
  payload["muOrbitSize"] = std::uint64_t{1} << g;
  payload["minusculeTranslationLength"] = g * (g + 1) / 2;
  emit_json(out, payload);
  return 0;
}

int cmd_adm(const AdmSet& adm, bool count_only, const std::string& format, std::ostream& out) {
  if (count_only) {
    out << adm.size() << "\n";
    return 0;
  }
  if (format == "csv") {
    out << csv_row({"id", "length", "omegaPower", "word"});
    for (int id = 0; id < adm.size(); ++id)
      out << csv_row({std::to_string(id), std::to_string(adm.length(id)),
                      std::to_string(adm.element(id).omega()),
                      render_element(adm.context(), adm.element(id))});
    return 0;
  }
  json payload;
  payload["kind"] = "adm";
  payload["g"] = adm.context().rank();
  payload["count"] = adm.size();
  payload["elements"] = json::array();
  for (int id = 0; id < adm.size(); ++id) payload["elements"].push_back(element_record(adm, id));
  emit_json(out, payload);
  return 0;
}

int cmd_adm_j(const AdmSet& adm, const ParahoricType& j, std::ostream& out) {
  json payload;
  payload["kind"] = "admJ";
  payload["g"] = adm.context().rank();
  payload["j"] = j.indices();
  json blocks = json::array();
  for (const AdmBlock& block : adm.blocks(j)) {
    json rec;
    rec["minRep"] = element_record(adm, block.min_rep_id);
    rec["size"] = block.member_ids.size();
    int lo = adm.length(block.member_ids.front());
    int hi = lo;
    json members = json::array();
    for (int id : block.member_ids) {
      lo = std::min(lo, adm.length(id));
      hi = std::max(hi, adm.length(id));
      members.push_back(element_record(adm, id));
    }
    rec["lengthRange"] = {lo, hi};
    rec["members"] = std::move(members);
    blocks.push_back(std::move(rec));
  }
  payload["blockCount"] = blocks.size();
  payload["blocks"] = std::move(blocks);
  emit_json(out, payload);
  return 0;
}

json report_record(const AdmSet& adm, const StratumReport& rep) {
  json rec;
  rec["minRep"] = element_record(adm, rep.min_rep_id);
  json members = json::array();
  for (int id : rep.member_ids) members.push_back(element_record(adm, id));
  rec["members"] = std::move(members);
  rec["cSuperspecial"] = rep.c_superspecial;
  rec["isSupersingular"] = rep.supersingular;
  rec["lengthRange"] = {rep.min_length, rep.max_length};
  return rec;
}

int cmd_classify(const AdmSet& adm, const ParahoricType& j, const std::string& word,
                 std::ostream& out) {
  json payload;
  payload["kind"] = "classify";
  payload["g"] = adm.context().rank();
  payload["j"] = j.indices();
  json reports = json::array();
  if (!word.empty()) {
    const ExtElement x = parse_element(adm.context(), word);
    const std::optional<int> id = adm.id_of(x);
    if (!id) throw FormatError("element is not admissible: " + word);
    reports.push_back(report_record(adm, classify_stratum(adm, j, *id)));
  } else {
    for (const StratumReport& rep : classify_all(adm, j))
      reports.push_back(report_record(adm, rep));
  }
  payload["reports"] = std::move(reports);
  emit_json(out, payload);
  return 0;
}

int cmd_eo(const AdmSet& adm, const std::string& format, std::ostream& out) {
  const std::vector<EoRow> rows = eo_rows(adm);
  bool all_match = true;
  for (const EoRow& row : rows) all_match = all_match && row.unique_min;
  if (format == "csv") {
    out << csv_row({"final", "psi", "length", "j", "blockSize", "uniqueMin"});
    for (const EoRow& row : rows) {
      const std::string name =
          row.final_word.empty()
              ? "e"
              : [&] {
                  std::string s;
                  for (std::size_t k = 0; k < row.final_word.size(); ++k)
                    s += (k ? " s" : "s") + std::to_string(row.final_word[k]);
                  return s;
                }();
      out << csv_row({name, render_sequence(row.psi), std::to_string(row.length),
                      row.j.render(), std::to_string(row.block_size),
                      row.unique_min ? "true" : "false"});
    }
    return all_match ? 0 : 1;
  }
  json payload;
  payload["kind"] = "eo";
  payload["g"] = adm.context().rank();
  json out_rows = json::array();
  for (const EoRow& row : rows) {
    json rec;
    std::string name;
    for (std::size_t k = 0; k < row.final_word.size(); ++k)
      name += (k ? " s" : "s") + std::to_string(row.final_word[k]);
    rec["final"] = name.empty() ? "e" : name;
    rec["psi"] = std::vector<int>(row.psi.psi.begin() + 1, row.psi.psi.end());
    rec["length"] = row.length;
    rec["j"] = row.j.indices();
    rec["fullType"] = row.full_type;
    rec["blockSize"] = row.block_size;
    rec["uniqueMin"] = row.unique_min;
    out_rows.push_back(std::move(rec));
  }
  payload["rows"] = std::move(out_rows);
  emit_json(out, payload);
  return all_match ? 0 : 1;
}

int cmd_verify(int g, const std::string& suite,
               const std::optional<std::filesystem::path>& cache, std::ostream& out,
               std::ostream& err) {
  const GroupContext ctx(g);
  std::optional<AdmSet> adm;
  const auto need_adm = [&]() -> const AdmSet& {
    if (!adm) adm.emplace(load_or_enumerate(ctx, cache, &err));
    return *adm;
  };
  std::vector<SuiteReport> reports;
  const bool all = suite == "all";
  if (all || suite == "coxeter") reports.push_back(verify_coxeter(ctx));
  if (all || suite == "perm-adm") reports.push_back(verify_perm_adm(need_adm()));
  if (all || suite == "lemma3") reports.push_back(verify_structural(ctx));
  if (all || suite == "lemma4") reports.push_back(verify_existence(need_adm()));
  if (all || suite == "thm45") reports.push_back(verify_ss_iff_ssp(need_adm()));
  if (all || suite == "eo") reports.push_back(verify_eo_match(need_adm()));
  json payload;
  payload["kind"] = "verify";
  payload["g"] = g;
  json suites = json::array();
  bool pass = true;
  for (const SuiteReport& rep : reports) {
    pass = pass && rep.pass;
    json rec;
    rec["suite"] = rep.suite;
    rec["pass"] = rep.pass;
    rec["notes"] = rep.notes;
    rec["counterexamples"] = rep.counterexamples;
    suites.push_back(std::move(rec));
  }
  payload["suites"] = std::move(suites);
  payload["pass"] = pass;
  emit_json(out, payload);
  return pass ? 0 : 1;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

int cmd_hasse(const AdmSet& adm, const std::string& file, std::ostream& out, std::ostream& err) {
  std::ostringstream dot;
  dot << "digraph adm {\n  rankdir=BT;\n";
  for (int id = 0; id < adm.size(); ++id)
    dot << "  n" << id << " [label=\""
        << dot_escape(render_element(adm.context(), adm.element(id))) << "\"];\n";
  for (const auto& [lo, hi] : adm.hasse_edges()) dot << "  n" << lo << " -> n" << hi << ";\n";
  dot << "}\n";
  if (file.empty()) {
    out << dot.str();
    return 0;
  }
  std::ofstream sink(file, std::ios::binary | std::ios::trunc);
  if (!sink) {
    err << "error: cannot open output file: " << file << "\n";
    return 2;
  }
  sink << dot.str();
  return sink ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratification combinatorics of the symplectic similitude group:\n"
               "admissible sets, parahoric double cosets and stratum classification."};
  app.set_help_all_flag("--help-all");
  std::string cache_flag;
  app.add_option("--cache", cache_flag,
                 "Directory holding admissible-set snapshots (STRATA_CACHE_DIR overrides)");

  int g = 0;
  bool count_only = false;
  bool list_mode = false;
  std::string format = "json";
  std::string j_list;
  std::string word;
  std::string suite = "all";
  std::string dot_file;

  const auto add_g = [&](CLI::App* cmd) {
    cmd->fallthrough();  // lets the global --cache appear after the subcommand
    cmd->add_option("--g", g, "Rank (genus)")->required()->check(CLI::Range(1, 12));
  };
  CLI::App* info = app.add_subcommand("info", "Group facts for rank g");
  add_g(info);
  CLI::App* adm = app.add_subcommand("adm", "Admissible set of the minuscule coweight");
  add_g(adm);
  CLI::Option* count_opt = adm->add_flag("--count", count_only, "Print only the cardinality");
  adm->add_flag("--list", list_mode, "Print the full element table")->excludes(count_opt);
  adm->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  CLI::App* admj = app.add_subcommand("adm-j", "Double-coset blocks at a parahoric type");
  add_g(admj);
  admj->add_option("--j", j_list, "Parahoric type, e.g. 0,2")->required();
  CLI::App* classify = app.add_subcommand("classify", "Superspecial/supersingular classification");
  add_g(classify);
  classify->add_option("--j", j_list, "Parahoric type, e.g. 0,2")->required();
  classify->add_option("--x", word, "Element word, e.g. 't s1'");
  CLI::App* eo = app.add_subcommand("eo", "Stratum-matching table of the final elements");
  add_g(eo);
  eo->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  add_g(verify);
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"all", "coxeter", "perm-adm", "lemma3", "lemma4", "thm45", "eo"}));
  CLI::App* hasse = app.add_subcommand("hasse", "Cover-relation digraph in DOT form");
  add_g(hasse);
  hasse->add_option("-o,--output", dot_file, "Output file (default: stdout)");
  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("wstrata");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::optional<std::filesystem::path> cache = cache_dir(cache_flag);
    if (info->parsed()) return cmd_info(g, out);
    const GroupContext ctx(g);
    const auto adm_set = [&]() { return load_or_enumerate(ctx, cache, &err); };
    if (adm->parsed()) return cmd_adm(adm_set(), count_only, format, out);
    if (admj->parsed())
      return cmd_adm_j(adm_set(), ParahoricType(g, parse_index_list(j_list)), out);
    if (classify->parsed())
      return cmd_classify(adm_set(), ParahoricType(g, parse_index_list(j_list)), word, out);
    if (eo->parsed()) return cmd_eo(adm_set(), format, out);
    if (verify->parsed()) return cmd_verify(g, suite, cache, out, err);
    if (hasse->parsed()) return cmd_hasse(adm_set(), dot_file, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace wstrata
