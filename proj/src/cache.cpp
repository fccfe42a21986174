#include "wstrata/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wstrata/errors.hpp"

namespace wstrata {

namespace {

constexpr const char* kMagicLine = "WSTRATA 1";

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

std::string cache_file_name(int g) { return "adm_g" + std::to_string(g) + ".wstrata"; }

std::string serialize_cache(const AdmSet& adm) {
  std::ostringstream out;
  out << kMagicLine << '\n';
  nlohmann::json header;
  header["g"] = adm.context().rank();
  header["elementCount"] = adm.size();
  out << header.dump() << '\n';
  for (int id = 0; id < adm.size(); ++id) {
    nlohmann::json rec;
    rec["id"] = id;
    rec["omegaPower"] = adm.element(id).omega();
    rec["word"] = adm.word(id);
    rec["length"] = adm.length(id);
    out << rec.dump() << '\n';
  }
  nlohmann::json edges;
  edges["hasseEdges"] = adm.hasse_edges();
  out << edges.dump() << '\n';
  std::string body = out.str();
  body += "checksum fnv1a64 " + hex16(fnv1a64(body)) + "\n";
  return body;
}

AdmSet deserialize_cache(const GroupContext& ctx, const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != kMagicLine)
    throw FormatError("unrecognized magic or format version");

  // Checksum covers everything before its own line.
  const std::size_t mark = content.rfind("checksum fnv1a64 ");
  if (mark == std::string::npos || (mark != 0 && content[mark - 1] != '\n'))
    throw FormatError("missing checksum line");
  const std::string body = content.substr(0, mark);
  std::string given = content.substr(mark + 17);
  while (!given.empty() && (given.back() == '\n' || given.back() == '\r')) given.pop_back();
  if (given != hex16(fnv1a64(body))) throw FormatError("checksum mismatch");

  const auto next_json = [&in]() {
    std::string text;
    if (!std::getline(in, text)) throw FormatError("truncated record section");
    try {
      return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("bad record line: ") + e.what());
    }
  };

  try {
    const nlohmann::json header = next_json();
    if (header.at("g").get<int>() != ctx.rank()) throw FormatError("rank mismatch");
    const int count = header.at("elementCount").get<int>();
    if (count < 1) throw FormatError("bad element count");
    std::vector<std::vector<int>> words;
    std::vector<int> omegas;
    words.reserve(static_cast<std::size_t>(count));
    for (int id = 0; id < count; ++id) {
      const nlohmann::json rec = next_json();
      if (rec.at("id").get<int>() != id) throw FormatError("ids are not dense and sorted");
      std::vector<int> word = rec.at("word").get<std::vector<int>>();
      if (rec.at("length").get<int>() != static_cast<int>(word.size()))
        throw FormatError("stored length disagrees with the stored word");
      words.push_back(std::move(word));
      omegas.push_back(rec.at("omegaPower").get<int>());
    }
    const nlohmann::json tail = next_json();
    const auto hasse = tail.at("hasseEdges").get<std::vector<std::pair<int, int>>>();
    return AdmSet::from_stored(ctx, words, omegas, hasse);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad record field: ") + e.what());
  }
}

void cache_store(const AdmSet& adm, const std::filesystem::path& file) {
  const std::string body = serialize_cache(adm);
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open cache file for writing: " + tmp.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw FormatError("cache write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<AdmSet> cache_try_load(const GroupContext& ctx, const std::filesystem::path& file,
                                     std::ostream* warn) {
  std::error_code ec;
  if (!std::filesystem::exists(file, ec) || ec) return std::nullopt;
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    if (warn) *warn << "warning: cannot read cache file " << file.string() << "\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return deserialize_cache(ctx, buf.str());
  } catch (const FormatError& e) {
    if (warn)
      *warn << "warning: discarding cache file " << file.string() << " (" << e.what()
            << "); recomputing\n";
    return std::nullopt;
  }
}

AdmSet load_or_enumerate(const GroupContext& ctx, const std::optional<std::filesystem::path>& dir,
                         std::ostream* warn) {
  if (!dir) return AdmSet::enumerate(ctx);
  const std::filesystem::path file = *dir / cache_file_name(ctx.rank());
  if (std::optional<AdmSet> cached = cache_try_load(ctx, file, warn)) return std::move(*cached);
  AdmSet fresh = AdmSet::enumerate(ctx);
  try {
    std::filesystem::create_directories(*dir);
    cache_store(fresh, file);
  } catch (const std::exception& e) {
    if (warn) *warn << "warning: could not store cache file (" << e.what() << ")\n";
  }
  return fresh;
}

}  // namespace wstrata
