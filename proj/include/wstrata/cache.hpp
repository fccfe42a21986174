#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "wstrata/adm_set.hpp"

namespace wstrata {

// On-disk admissible-set snapshot.  Layout, in order:
//   line 1:  "WSTRATA 1"                     (magic + format version)
//   line 2:  {"elementCount":N,"g":G}        (JSON header)
//   N lines: {"id":K,"length":L,"omegaPower":P,"word":[...]}
//   1 line:  {"hasseEdges":[[lo,hi],...]}
//   last:    "checksum fnv1a64 <16 hex>"     (over every preceding byte)
// Writers are atomic (temp file then rename); loads re-derive the elements
// and re-check lengths, ordering, the length-zero base, the extreme
// translations and permissibility before trusting the file.

std::string cache_file_name(int g);  // "adm_g2.wstrata"

std::string serialize_cache(const AdmSet&);
AdmSet deserialize_cache(const GroupContext&, const std::string& content);  // throws FormatError

void cache_store(const AdmSet&, const std::filesystem::path& file);

// nullopt when the file is missing or invalid; invalid files emit one
// warning line to `warn` (when given) and are left for the caller to
// overwrite with a fresh snapshot.
std::optional<AdmSet> cache_try_load(const GroupContext&, const std::filesystem::path& file,
                                     std::ostream* warn);

// The CLI path: enumerate, or load from `dir` when set (storing back on a
// miss, best effort).
AdmSet load_or_enumerate(const GroupContext&, const std::optional<std::filesystem::path>& dir,
                         std::ostream* warn);

}  // namespace wstrata
