#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "modfib/degrees.hpp"
#include "modfib/subgroups.hpp"
#include "modfib/tables.hpp"

namespace modfib {

// Facts about a modular curve that are read from data, never computed.
struct CatalogFlags {
  std::optional<bool> full_det;
  std::optional<std::int64_t> genus;
  std::optional<std::uint32_t> sl_level;
  std::optional<bool> has_infinitely_many_rational_points;
  std::optional<bool> has_rational_point;
  std::optional<std::int64_t> rank_bound;  // upper bound on the analytic rank
};

struct CatalogEntry {
  std::string label;  // "N.i.g.tag.k"
  std::uint32_t level = 0;
  std::optional<std::vector<std::uint64_t>> orbit_multiset_x0;
  std::optional<std::vector<std::uint64_t>> orbit_multiset_x1;
  std::vector<JInvariant> j_invariants;
  std::optional<SubgroupSpec> generators;
  CatalogFlags flags;
  bool conditional = false;  // from the finite tables
  std::string source;
};

// Subgroup file: {"modulus": n, "generators": [[a,b,c,d], ...], "label"?: s}.
SubgroupSpec parse_subgroup(const std::string& json_text);
SubgroupSpec load_subgroup(const std::filesystem::path& path);
std::string serialize_subgroup(const SubgroupSpec& spec);

// Lookup in the embedded tables; throws NotFound.
CatalogEntry builtin(const std::string& label);
CatalogEntry builtin(const JInvariant& j);
const ExceptionalRow* exceptional_row_for(const JInvariant& j);

struct IngestResult {
  std::vector<CatalogEntry> entries;
  std::vector<std::string> errors;  // one per rejected file or entry
};

// Reads index.json (an array of {"label", "file"?, "flags"?, ...}) or, if
// absent, every *.json subgroup file in the directory.
IngestResult ingest_catalog(const std::filesystem::path& dir, std::uint64_t cap = kDefaultCap);

struct PipelineDecision {
  CatalogEntry entry;
  bool passed = false;
  int failed_condition = 0;  // 1..5 when rejected
  std::string reason;
  std::vector<std::string> annotations;  // e.g. "flag-unknown: ..."
};

// The five candidate conditions: (1) full determinant, GL-level admitted
// and genus <= 1; (2) GL-level = SL-level; (3) B0- or B1-closed; (4) genus
// 0 needs a rational point; (5) genus 1 needs positive rank.  Computable
// conditions are recomputed from generators; the last two come from flags.
std::vector<PipelineDecision> pipeline_filter(const std::vector<CatalogEntry>& entries,
                                              std::uint64_t cap = kDefaultCap);

}  // namespace modfib
