// Command-line front end.  Every command prints one JSON document on
// stdout (or a plain listing with --pretty).

#include <algorithm>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "modfib/arith.hpp"
#include "modfib/catalog.hpp"
#include "modfib/closures.hpp"
#include "modfib/coset_actions.hpp"
#include "modfib/degrees.hpp"
#include "modfib/errors.hpp"
#include "modfib/modular_invariants.hpp"
#include "modfib/subgroups.hpp"

using nlohmann::json;
using namespace modfib;

namespace {

constexpr const char* kConditionNote = "conditional on Conjecture (Zywina)";

struct Options {
  bool pretty = false;
  bool strict = false;
  std::uint64_t cap = kDefaultCap;
};

const char* kSkipped = "skipped: cap";

void print_pretty(const json& v, const std::string& indent, std::ostream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it->is_structured() && !(it->is_array() && std::all_of(it->begin(), it->end(),
                                                                   [](const json& x) { return x.is_primitive(); }))) {
        out << indent << it.key() << ":\n";
        print_pretty(*it, indent + "  ", out);
      } else {
        out << indent << it.key() << ": ";
        print_pretty(*it, "", out);
      }
    }
  } else if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
    if (flat) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
      out << indent << "[" << line << "]\n";
    } else {
      for (const auto& x : v) {
        if (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); })) {
          print_pretty(x, indent + "- ", out);
        } else {
          out << indent << "-\n";
          print_pretty(x, indent + "  ", out);
        }
      }
    }
  } else {
    out << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void emit(const json& doc, const Options& o) {
  if (o.pretty) print_pretty(doc, "", std::cout);
  else std::cout << doc.dump() << "\n";
}

Curve parse_curve(const std::string& s) {
  if (s == "x0") return Curve::X0;
  if (s == "x1") return Curve::X1;
  throw InputError("unknown curve '" + s + "' (expected x0 or x1)");
}

StandardFamily parse_family(const std::string& s, std::uint32_t n) {
  if (s == "b0") return {FamilyKind::B0, n};
  if (s == "b1") return {FamilyKind::B1, n};
  if (s == "b1strict") return {FamilyKind::B1Strict, n};
  throw InputError("unknown family '" + s + "' (expected b0, b1 or b1strict)");
}

json matrices(const std::vector<Mat2>& gens) {
  json out = json::array();
  for (const Mat2& g : gens) out.push_back({g.a(), g.b(), g.c(), g.d()});
  return out;
}

// Runs f, turning CapExceeded into the skip marker unless --strict.
template <class F>
json capped(const Options& o, F&& f) {
  try {
    return f();
  } catch (const CapExceeded&) {
    if (o.strict) throw;
    return kSkipped;
  }
}

json closure_summary(const SubgroupSpec& spec, const Options& o) {
  json out;
  out["modulus"] = spec.modulus;
  out["generators"] = matrices(spec.generators);
  out["level"] = capped(o, [&]() -> json { return gl_level(Subgroup::enumerate(spec, o.cap), o.cap); });
  out["index"] = capped(o, [&]() -> json { return Subgroup::enumerate(spec, o.cap).index(); });
  out["genus"] = capped(o, [&]() -> json { return genus_data(Subgroup::enumerate(spec, o.cap), o.cap).genus; });
  return out;
}

json cmd_info(const std::string& file, const Options& o) {
  const SubgroupSpec spec = load_subgroup(file);
  json out;
  out["modulus"] = spec.modulus;
  if (spec.label) out["label"] = *spec.label;
  std::optional<Subgroup> g;
  try {
    g = Subgroup::enumerate(spec, o.cap);
  } catch (const CapExceeded&) {
    if (o.strict) throw;
  }
  if (!g) {
    for (const char* k : {"order", "index", "gl_level", "sl_level", "det_full", "contains_minus_I", "genus"})
      out[k] = kSkipped;
    return out;
  }
  out["order"] = g->order();
  out["index"] = g->index();
  out["det_full"] = g->is_full_det();
  out["contains_minus_I"] = g->contains_minus_identity();
  out["gl_level"] = capped(o, [&]() -> json { return gl_level(*g, o.cap); });
  out["sl_level"] = capped(o, [&]() -> json { return sl_level(*g, o.cap); });
  out["genus"] = capped(o, [&]() -> json { return genus_data(*g, o.cap).genus; });
  return out;
}

json cmd_genus(const std::string& file, const Options& o) {
  const Subgroup g = Subgroup::enumerate(load_subgroup(file), o.cap);
  const GenusData d = genus_data(g, o.cap);
  return json{{"genus", d.genus}, {"index", d.index}, {"e2", d.e2},
              {"e3", d.e3},       {"cusps", d.cusps}, {"sl_level", d.sl_level}};
}

json cmd_closure(const std::string& family, std::uint32_t n, const std::string& kind, const std::string& file,
                 const Options& o) {
  const SubgroupSpec spec = load_subgroup(file);
  const StandardFamily fam = parse_family(family, n);
  const CosetTable table = CosetTable::for_family(fam);
  if (kind != "ch" && kind != "h") throw InputError("unknown closure kind '" + kind + "'");
  const ClosureResult r = kind == "ch" ? ch_closure(table, spec) : h_closure(table, spec);
  json out;
  out["family"] = fam.name();
  out["kind"] = kind;
  out["closure"] = closure_summary(r.closure, o);
  out["order"] = r.order;
  out["orbits"] = r.partition.sorted_sizes();
  if (kind == "ch") out["input_is_closed"] = ch_closed(table, spec, o.cap);
  return out;
}

json cmd_fibers(const std::string& curve, std::uint32_t n, const std::string& file, const std::string& j,
                bool as_set, const Options& o) {
  const Curve c = parse_curve(curve);
  const SubgroupSpec spec = load_subgroup(file);
  const DegreeMultiset m =
      j.empty() ? fiber_degrees(c, n, spec) : fiber_degrees(c, n, JInvariant::parse(j), spec);
  json out;
  out["curve"] = curve_name(c);
  out["n"] = n;
  out["conditional"] = false;
  if (as_set) {
    out["degrees"] = point_degrees(c, n, spec).values;
    return out;
  }
  out["fiber"] = m.to_string();
  out["values"] = m.values;
  const StandardFamily fam{c == Curve::X0 ? FamilyKind::B0 : FamilyKind::B1, n};
  const ClosureResult r = ch_closure(CosetTable::for_family(fam), adjoin_minus_identity(spec));
  out["closure"] = closure_summary(r.closure, o);
  return out;
}

json cmd_equivalent(const std::string& family, std::uint32_t n, const std::string& a, const std::string& b) {
  const CosetTable table = CosetTable::for_family(parse_family(family, n));
  const SubgroupSpec x = load_subgroup(a), y = load_subgroup(b);
  return json{{"h_equivalent", h_equivalent(table, x, y)}, {"ch_equivalent", ch_equivalent(table, x, y)}};
}

json cmd_theorem(const std::string& which, std::uint32_t n) {
  Curve c;
  Regime r;
  if (which == "1.1") c = Curve::X0, r = Regime::Infinite;
  else if (which == "1.2") c = Curve::X1, r = Regime::Infinite;
  else if (which == "1.3") c = Curve::X0, r = Regime::All;
  else if (which == "1.4") c = Curve::X1, r = Regime::All;
  else throw InputError("unknown theorem '" + which + "' (expected 1.1, 1.2, 1.3 or 1.4)");
  const DegreeSet s = r == Regime::Infinite ? infinite_degree_set(c, n) : all_degree_set(c, n);
  json out;
  out["which"] = which;
  out["curve"] = curve_name(c);
  out["n"] = n;
  out["regime"] = r == Regime::Infinite ? "infinite" : "all";
  out["degrees"] = s.values;
  json parts = json::object();
  for (const auto& dc : degree_contributions(c, n, r)) parts[std::to_string(dc.m)] = dc.degrees;
  out["contributions"] = parts;
  json constant = json::array();
  for (const auto& row : r == Regime::Infinite ? infinite_level_degrees(c) : all_level_degrees(c))
    if (row.level == n) constant = row.degrees;
  out["level_constant"] = constant;
  out["conditional"] = s.conditional();
  if (s.conditional()) out["condition"] = kConditionNote;
  return out;
}

json entry_json(const CatalogEntry& e) {
  json out;
  out["label"] = e.label;
  out["level"] = e.level;
  out["source"] = e.source;
  out["conditional"] = e.conditional;
  if (e.orbit_multiset_x0) out["orbit_multiset_x0"] = *e.orbit_multiset_x0;
  if (e.orbit_multiset_x1) out["orbit_multiset_x1"] = *e.orbit_multiset_x1;
  if (!e.j_invariants.empty()) {
    json js = json::array();
    for (const auto& j : e.j_invariants) js.push_back(j.to_string());
    out["j_invariants"] = js;
  }
  return out;
}

json cmd_catalog_validate(const std::string& dir, const Options& o, int& exit_code) {
  json out;
  if (dir.empty()) {
    // Embedded tables: multiset sums and CM disjointness.
    json errors = json::array();
    std::uint64_t rows = 0;
    for (const auto& row : infinite_b0_closures()) {
      ++rows;
      std::uint64_t s = 0;
      for (auto v : row.orbits) s += v;
      if (s != dedekind_psi(row.level)) errors.push_back(row.label + ": multiset sum");
    }
    for (Curve c : {Curve::X0, Curve::X1})
      for (const auto& row : finite_closures(c)) {
        ++rows;
        std::uint64_t s = 0;
        for (auto v : row.orbits) s += v;
        if (s != fiber_total(c, row.level)) errors.push_back(row.label + ": multiset sum");
        for (const auto& j : row.j_invariants)
          if (is_cm(JInvariant::parse(j))) errors.push_back(row.label + ": CM j " + j);
      }
    out["source"] = "builtin";
    out["rows"] = rows;
    out["errors"] = errors;
    if (!errors.empty()) exit_code = 4;
    return out;
  }
  const IngestResult r = ingest_catalog(dir, o.cap);
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(entry_json(e));
  out["entries"] = entries;
  out["errors"] = r.errors;
  if (!r.errors.empty()) exit_code = 2;
  return out;
}

json cmd_pipeline(const std::string& dir, const Options& o) {
  std::vector<CatalogEntry> entries;
  if (dir.empty()) {
    for (const auto& row : infinite_b0_closures()) entries.push_back(builtin(row.label));
  } else {
    entries = ingest_catalog(dir, o.cap).entries;
  }
  json out = json::array();
  for (const auto& d : pipeline_filter(entries, o.cap)) {
    json item;
    item["label"] = d.entry.label;
    item["passed"] = d.passed;
    if (!d.passed) {
      item["failed_condition"] = d.failed_condition;
      item["reason"] = d.reason;
    }
    item["annotations"] = d.annotations;
    out.push_back(item);
  }
  return json{{"decisions", out}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of points with rational j-invariant on X0(n) and X1(n)"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable output");
  app.add_flag("--strict", o.strict, "Exit with code 3 when an enumeration cap is hit");
  app.add_option("--cap", o.cap, "Enumeration cap (elements)");

  std::string file, file2, curve = "x0", family = "b0", kind = "ch", which, dir, j;
  std::uint32_t n = 1;

  auto* info = app.add_subcommand("info", "Invariants of a subgroup file");
  info->add_option("--file", file)->required();
  auto* genus = app.add_subcommand("genus", "Genus data of a subgroup file");
  genus->add_option("--file", file)->required();
  auto* closure = app.add_subcommand("closure", "H- or CH-closure with respect to a standard family");
  closure->add_option("--family", family);
  closure->add_option("--n", n)->required();
  closure->add_option("--kind", kind);
  closure->add_option("--file", file)->required();
  auto* fibers = app.add_subcommand("fibers", "Fiber-degree multiset on X0(n) or X1(n)");
  auto* points = app.add_subcommand("points", "Point-degree set on X0(n) or X1(n)");
  for (auto* sc : {fibers, points}) {
    sc->add_option("--curve", curve);
    sc->add_option("--n", n)->required();
    sc->add_option("--file", file)->required();
    sc->add_option("--j", j, "The j-invariant; CM values are refused");
  }
  auto* equivalent = app.add_subcommand("equivalent", "H- and CH-equivalence of two subgroups");
  equivalent->add_option("--family", family);
  equivalent->add_option("--n", n)->required();
  equivalent->add_option("--file", file)->required();
  equivalent->add_option("--file2", file2)->required();
  auto* theorem = app.add_subcommand("theorem", "Degree sets assembled from the per-level constants");
  theorem->add_option("--which", which)->required();
  theorem->add_option("--n", n)->required();
  auto* validate_cmd = app.add_subcommand("catalog-validate", "Validate an ingest directory or the embedded tables");
  validate_cmd->add_option("--dir", dir);
  auto* pipeline = app.add_subcommand("pipeline", "Run the candidate filter");
  pipeline->add_option("--dir", dir);
  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (n == 0) {
    std::cerr << "error: --n must be positive\n";
    return 2;
  }

  int exit_code = 0;
  try {
    json out;
    if (*info) out = cmd_info(file, o);
    else if (*genus) out = cmd_genus(file, o);
    else if (*closure) out = cmd_closure(family, n, kind, file, o);
    else if (*fibers) out = cmd_fibers(curve, n, file, j, false, o);
    else if (*points) out = cmd_fibers(curve, n, file, j, true, o);
    else if (*equivalent) out = cmd_equivalent(family, n, file, file2);
    else if (*theorem) out = cmd_theorem(which, n);
    else if (*validate_cmd) out = cmd_catalog_validate(dir, o, exit_code);
    else if (*pipeline) out = cmd_pipeline(dir, o);
    emit(out, o);
    return exit_code;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (partial count " << e.partial_count() << ")\n";
    if (o.strict) return 3;
    emit(json{{"skipped", "cap"}, {"detail", e.what()}}, o);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
