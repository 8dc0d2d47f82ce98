#include "modfib/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "modfib/arith.hpp"
#include "modfib/closures.hpp"
#include "modfib/coset_actions.hpp"
#include "modfib/errors.hpp"
#include "modfib/modular_invariants.hpp"

namespace modfib {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::int64_t as_integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(what + " is out of range");
  return v.get<std::int64_t>();
}

SubgroupSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("subgroup document must be a JSON object");
  if (!doc.contains("modulus")) throw ParseError("missing \"modulus\"");
  const std::int64_t n = as_integer(doc["modulus"], "modulus");
  if (n < 1 || n > (std::int64_t{1} << 31)) throw ParseError("modulus out of range: " + std::to_string(n));
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("missing \"generators\" array");
  std::vector<Mat2> gens;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const json& g = doc["generators"][i];
    const std::string what = "generator #" + std::to_string(i);
    if (!g.is_array() || g.size() != 4) throw ParseError(what + " must be an array of 4 integers");
    gens.emplace_back(static_cast<std::uint32_t>(n), as_integer(g[0], what), as_integer(g[1], what),
                      as_integer(g[2], what), as_integer(g[3], what));
  }
  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return make_spec(static_cast<std::uint32_t>(n), std::move(gens), std::move(label));
}

std::vector<std::uint64_t> multiset_from_json(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + " must be an array");
  std::vector<std::uint64_t> out;
  for (const json& x : v) {
    const std::int64_t k = as_integer(x, what);
    if (k <= 0) throw ParseError(what + " entries must be positive");
    out.push_back(static_cast<std::uint64_t>(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CatalogFlags flags_from_json(const json& f) {
  CatalogFlags out;
  if (!f.is_object()) throw ParseError("\"flags\" must be an object");
  auto boolean = [&](const char* key, std::optional<bool>& dst) {
    if (!f.contains(key)) return;
    if (!f[key].is_boolean()) throw ParseError(std::string("flag ") + key + " must be boolean");
    dst = f[key].get<bool>();
  };
  boolean("full_det", out.full_det);
  boolean("has_infinitely_many_rational_points", out.has_infinitely_many_rational_points);
  boolean("has_rational_point", out.has_rational_point);
  if (f.contains("genus")) out.genus = as_integer(f["genus"], "flag genus");
  if (f.contains("sl_level")) out.sl_level = static_cast<std::uint32_t>(as_integer(f["sl_level"], "flag sl_level"));
  if (f.contains("rank_bound")) out.rank_bound = as_integer(f["rank_bound"], "flag rank_bound");
  return out;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); }

// Shared checks for embedded and ingested entries.
void check_entry(const CatalogEntry& e, std::uint64_t cap) {
  const LabelInvariants claimed = parse_label(e.label);
  if (claimed.level != e.level)
    throw ConsistencyError("label " + e.label + ": level field " + std::to_string(e.level) +
                           " does not match the label");
  if (e.orbit_multiset_x0 && sum(*e.orbit_multiset_x0) != fiber_total(Curve::X0, e.level))
    throw ConsistencyError("label " + e.label + ": X0 orbit multiset does not sum to the index of B0(" +
                           std::to_string(e.level) + ")");
  if (e.orbit_multiset_x1 && sum(*e.orbit_multiset_x1) != fiber_total(Curve::X1, e.level))
    throw ConsistencyError("label " + e.label + ": X1 orbit multiset does not sum to the index of B1(" +
                           std::to_string(e.level) + ")");
  if (e.generators) {
    const LabelInvariants got = label_invariants(Subgroup::enumerate(*e.generators, cap), cap);
    if (!(got == claimed))
      throw ConsistencyError("label " + e.label + ": computed invariants " + got.prefix() +
                             " do not match the label");
  }
}

CatalogEntry entry_from_index(const json& item, const fs::path& dir) {
  if (!item.is_object() || !item.contains("label") || !item["label"].is_string())
    throw ParseError("index entry without a string \"label\"");
  CatalogEntry e;
  e.label = item["label"].get<std::string>();
  e.level = parse_label(e.label).level;
  e.source = (dir / "index.json").string();
  if (item.contains("file")) {
    if (!item["file"].is_string()) throw ParseError("label " + e.label + ": \"file\" must be a string");
    const fs::path file = dir / item["file"].get<std::string>();
    e.generators = load_subgroup(file);
    e.source = file.string();
  }
  if (item.contains("flags")) e.flags = flags_from_json(item["flags"]);
  if (item.contains("orbit_multiset_x0"))
    e.orbit_multiset_x0 = multiset_from_json(item["orbit_multiset_x0"], "orbit_multiset_x0");
  if (item.contains("orbit_multiset_x1"))
    e.orbit_multiset_x1 = multiset_from_json(item["orbit_multiset_x1"], "orbit_multiset_x1");
  if (item.contains("j_invariants")) {
    for (const json& j : item["j_invariants"]) {
      if (!j.is_string()) throw ParseError("label " + e.label + ": j-invariants must be strings");
      e.j_invariants.push_back(JInvariant::parse(j.get<std::string>()));
    }
  }
  return e;
}

}  // namespace

SubgroupSpec parse_subgroup(const std::string& json_text) {
  return spec_from_json(parse_json(json_text, "subgroup document"));
}

SubgroupSpec load_subgroup(const fs::path& path) {
  try {
    return spec_from_json(parse_json(read_file(path), path.string()));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

std::string serialize_subgroup(const SubgroupSpec& spec) {
  json doc;
  doc["modulus"] = spec.modulus;
  doc["generators"] = json::array();
  for (const Mat2& g : spec.generators) doc["generators"].push_back({g.a(), g.b(), g.c(), g.d()});
  if (spec.label) doc["label"] = *spec.label;
  return doc.dump();
}

namespace {

CatalogEntry from_finite(const FiniteClosureRow& row) {
  CatalogEntry e;
  e.label = row.label;
  e.level = row.level;
  (row.curve == Curve::X0 ? e.orbit_multiset_x0 : e.orbit_multiset_x1) = row.orbits;
  for (const auto& j : row.j_invariants) e.j_invariants.push_back(JInvariant::parse(j));
  e.conditional = true;
  e.source = "builtin";
  return e;
}

void merge_finite(CatalogEntry& e, const FiniteClosureRow& row) {
  (row.curve == Curve::X0 ? e.orbit_multiset_x0 : e.orbit_multiset_x1) = row.orbits;
}

}  // namespace

CatalogEntry builtin(const std::string& label) {
  std::optional<CatalogEntry> found;
  for (Curve c : {Curve::X0, Curve::X1})
    for (const auto& row : finite_closures(c)) {
      if (row.label != label) continue;
      if (found) merge_finite(*found, row);
      else found = from_finite(row);
    }
  if (found) return *found;
  for (const auto& row : infinite_b0_closures()) {
    if (row.label != label) continue;
    CatalogEntry e;
    e.label = row.label;
    e.level = row.level;
    e.orbit_multiset_x0 = row.orbits;
    e.source = "builtin";
    return e;
  }
  throw NotFound("no embedded entry with label " + label);
}

CatalogEntry builtin(const JInvariant& j) {
  std::optional<CatalogEntry> found;
  for (Curve c : {Curve::X0, Curve::X1})
    for (const auto& row : finite_closures(c)) {
      const bool has = std::any_of(row.j_invariants.begin(), row.j_invariants.end(),
                                   [&](const std::string& s) { return JInvariant::parse(s) == j; });
      if (!has) continue;
      if (!found) found = from_finite(row);
      else if (found->label == row.label) merge_finite(*found, row);
    }
  if (found) return *found;
  throw NotFound("no embedded entry for j = " + j.to_string());
}

const ExceptionalRow* exceptional_row_for(const JInvariant& j) {
  for (const auto& row : exceptional_rows())
    if (JInvariant::parse(row.j) == j) return &row;
  return nullptr;
}

IngestResult ingest_catalog(const fs::path& dir, std::uint64_t cap) {
  IngestResult out;
  if (!fs::is_directory(dir)) throw MissingCatalog("not a directory: " + dir.string());
  std::vector<CatalogEntry> candidates;
  const fs::path index = dir / "index.json";
  if (fs::exists(index)) {
    json doc;
    try {
      doc = parse_json(read_file(index), index.string());
    } catch (const ParseError& e) {
      out.errors.push_back(e.what());
      return out;
    }
    if (!doc.is_array()) {
      out.errors.push_back(index.string() + ": index must be a JSON array");
      return out;
    }
    for (const json& item : doc) {
      try {
        candidates.push_back(entry_from_index(item, dir));
      } catch (const InputError& e) {
        out.errors.push_back(e.what());
      }
    }
  } else {
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(dir))
      if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        SubgroupSpec spec = load_subgroup(f);
        if (!spec.label) throw ParseError(f.string() + ": subgroup file has no label");
        CatalogEntry e;
        e.label = *spec.label;
        e.level = parse_label(e.label).level;
        e.generators = std::move(spec);
        e.source = f.string();
        candidates.push_back(std::move(e));
      } catch (const InputError& e) {
        const std::string msg = e.what();
        out.errors.push_back(msg.rfind(f.string(), 0) == 0 ? msg : f.string() + ": " + msg);
      }
    }
  }
  for (auto& e : candidates) {
    try {
      check_entry(e, cap);
      out.entries.push_back(std::move(e));
    } catch (const Error& err) {
      out.errors.push_back(err.what());
    }
  }
  return out;
}

std::vector<PipelineDecision> pipeline_filter(const std::vector<CatalogEntry>& entries, std::uint64_t cap) {
  const auto& admitted = candidate_sl_levels();
  std::vector<PipelineDecision> out;
  for (const CatalogEntry& entry : entries) {
    PipelineDecision d;
    d.entry = entry;
    auto reject = [&](int cond, std::string why) {
      d.passed = false;
      d.failed_condition = cond;
      d.reason = std::move(why);
    };
    auto unknown = [&](const std::string& what) { d.annotations.push_back("flag-unknown: " + what); };

    std::optional<bool> full_det = entry.flags.full_det;
    std::optional<std::uint32_t> gl;
    std::optional<std::uint32_t> sl = entry.flags.sl_level;
    std::optional<std::int64_t> genus = entry.flags.genus;
    std::optional<Subgroup> g;
    if (!entry.label.empty()) {
      try {
        const LabelInvariants li = parse_label(entry.label);
        gl = li.level;
        if (!genus) genus = li.genus;
      } catch (const ParseError&) {
      }
    }
    try {
      if (entry.generators) {
        g = Subgroup::enumerate(*entry.generators, cap);
        full_det = g->is_full_det();
        gl = gl_level(*g, cap);
        sl = sl_level(*g, cap);
        genus = genus_data(*g, cap).genus;
      }
    } catch (const CapExceeded& e) {
      g.reset();
      d.annotations.push_back(std::string("skipped: cap (") + e.what() + ")");
    }

    d.passed = true;
    // (1)
    if (full_det == false) reject(1, "determinant image is not all of the units");
    else if (gl && std::find(admitted.begin(), admitted.end(), *gl) == admitted.end())
      reject(1, "GL-level " + std::to_string(*gl) + " is not an admitted level");
    else if (genus && *genus > 1) reject(1, "genus " + std::to_string(*genus) + " exceeds 1");
    else {
      if (!full_det) unknown("full_det");
      if (!gl) unknown("level");
      if (!genus) unknown("genus");
    }
    // (2)
    if (d.passed) {
      if (gl && sl && *gl != *sl)
        reject(2, "GL-level " + std::to_string(*gl) + " differs from SL-level " + std::to_string(*sl));
      else if (!sl) unknown("sl_level");
    }
    // (3)
    if (d.passed) {
      if (g && gl) {
        const CosetTable b0 = CosetTable::for_family({FamilyKind::B0, *gl});
        const CosetTable b1 = CosetTable::for_family({FamilyKind::B1, *gl});
        const bool closed0 = ch_closed(b0, g->spec(), cap);
        const bool closed1 = closed0 || ch_closed(b1, g->spec(), cap);
        if (!closed0 && !closed1) reject(3, "neither B0- nor B1-closed at its level");
        else d.annotations.push_back(closed0 ? "B0-closed" : "B1-closed");
      } else {
        unknown("closedness (no generators)");
      }
    }
    const auto& f = entry.flags;
    // (4)
    if (d.passed && genus && *genus == 0) {
      if (f.has_infinitely_many_rational_points == false || f.has_rational_point == false)
        reject(4, "genus 0 without a rational point");
      else if (!f.has_infinitely_many_rational_points && !f.has_rational_point)
        unknown("has_rational_point");
    }
    // (5)
    if (d.passed && genus && *genus == 1) {
      if (f.has_infinitely_many_rational_points == false) reject(5, "genus 1 of rank zero");
      else if (f.has_infinitely_many_rational_points == true) {
      } else if (f.rank_bound && *f.rank_bound == 0) reject(5, "genus 1 with analytic rank bound 0");
      else unknown("rank");
    }
    if (!genus && d.passed) unknown("rational points (genus unknown)");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace modfib
