#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigeo/analysis.hpp"
#include "bigeo/catalog.hpp"
#include "bigeo/construct.hpp"
#include "bigeo/design.hpp"
#include "bigeo/design_io.hpp"
#include "bigeo/numbertheory.hpp"
#include "bigeo/pattern.hpp"
#include "bigeo/search.hpp"

namespace bigeo::cli {

namespace {

using nlohmann::json;

// A catalog name or a design file.
Design resolve_design(const std::string& source) {
  for (const auto& name : catalog_names()) {
    if (name == source) return get_design(name).design;
  }
  if (!std::filesystem::exists(source)) {
    throw std::runtime_error("'" + source + "' is neither a catalog design nor a readable file");
  }
  return load_design(source);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

json params_json(const DesignParams& p) {
  return {{"b", p.b}, {"n", p.n}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
}

json brc_json(std::int64_t n, std::int64_t k, std::int64_t lambda, const BrcVerdict& v) {
  json out{{"n", n},
           {"k", k},
           {"lambda", lambda},
           {"case", v.applicable_case == BrcCase::even ? "even" : "odd"},
           {"passes", v.passes},
           {"summary", v.summary()},
           {"witness", nullptr},
           {"obstruction", nullptr},
           {"ryser_applies", ryser_applies(n, k, lambda)}};
  if (v.witness) out["witness"] = {v.witness->x, v.witness->y, v.witness->z};
  if (v.obstruction) out["obstruction"] = *v.obstruction;
  return out;
}

std::string degree_text(const std::map<std::size_t, std::size_t>& degrees) {
  std::string text;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    if (!text.empty()) text += ", ";
    text += std::to_string(it->first) + "x" + std::to_string(it->second);
  }
  return text;
}

struct Options {
  bool json = false;
  std::string source;
  std::string dot_path;
  std::string graph_json_path;
  std::string format = "dot";
  std::string out_path;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t b = 0;
  std::int64_t r = 0;
  std::int64_t n_max = 0;
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  double time_limit_s = 60.0;
  std::string catalog_name;
};

void cmd_verify(const Options& o, std::ostream& out) {
  const Design design = resolve_design(o.source);
  const VerificationReport report = verify_design(design);
  std::optional<ConditionCheck> conditions;
  if (report.params) conditions = check_necessary_conditions(*report.params);
  if (o.json) {
    json doc{{"valid", report.valid}, {"params", nullptr}, {"violations", report.violations}};
    if (report.params) {
      doc["params"] = params_json(*report.params);
      doc["symmetric"] = report.params->symmetric();
      doc["necessary_conditions"] = conditions->holds;
    }
    out << doc.dump() << '\n';
    return;
  }
  if (report.valid) {
    out << "valid: " << report.params->to_string() << (report.params->symmetric() ? " symmetric" : "")
        << '\n';
    out << "necessary conditions: " << (conditions->holds ? "hold" : "fail") << '\n';
  } else {
    out << "invalid\n";
    for (const auto& v : report.violations) out << "  - " << v << '\n';
  }
}

void cmd_construct(const Options& o, std::ostream& out) {
  const StarGraph star = star_construct(resolve_design(o.source));
  const DesignParams& p = star.params();
  if (!o.dot_path.empty()) write_file(o.dot_path, export_dot(star));
  if (!o.graph_json_path.empty()) write_file(o.graph_json_path, graph_to_json(star).dump(2) + "\n");
  if (o.json) {
    out << json{{"params", params_json(p)},
                {"n_vertices", star.graph().vertex_count()},
                {"n_edges", star.graph().edge_count()}}
               .dump()
        << '\n';
    return;
  }
  out << "K" << p.n << "*(" << p.r << "," << p.k << "," << p.lambda << ") from "
      << p.to_string() << ": " << star.graph().vertex_count() << " vertices, "
      << star.graph().edge_count() << " edges\n";
  if (!o.dot_path.empty()) out << "DOT written to " << o.dot_path << '\n';
  if (!o.graph_json_path.empty()) out << "graph JSON written to " << o.graph_json_path << '\n';
}

void cmd_analyze(const Options& o, std::ostream& out) {
  const Design design = resolve_design(o.source);
  const StarGraph star = star_construct(design);
  const GraphReport report = classify(star.graph());
  const DesignParams& p = star.params();
  std::optional<IntersectionProfile> profile;
  if (design.block_count() >= 2) profile = intersection_profile(design, p.lambda);

  if (o.json) {
    json doc = report.to_json();
    doc["params"] = params_json(p);
    if (profile) {
      doc["intersection"] = {{"max_intersection", profile->max_intersection},
                             {"has_disjoint_pair", profile->has_disjoint_pair},
                             {"mu", profile->mu}};
    }
    out << doc.dump() << '\n';
    return;
  }
  out << "design: " << p.to_string() << '\n';
  if (profile) {
    out << "block intersections: max " << profile->max_intersection << ", disjoint pair "
        << (profile->has_disjoint_pair ? "yes" : "no") << ", mu " << profile->mu << '\n';
  }
  out << "vertices: " << report.n_vertices << '\n'
      << "edges: " << report.n_edges << '\n'
      << "degrees: " << degree_text(report.degree_multiset) << '\n'
      << "connected: " << (report.is_connected ? "yes" : "no") << '\n'
      << "diameter: " << report.diameter << '\n'
      << "vertex connectivity: " << report.vertex_connectivity << '\n'
      << "geodetic index: " << report.geodetic_index << '\n'
      << "block: " << (report.is_block ? "yes" : "no") << '\n';
  if (report.class_membership) {
    const auto& c = *report.class_membership;
    out << "class: B(" << c.connectivity << "," << c.degree << "," << c.diameter << ")\n";
  } else {
    out << "class: none\n";
  }
}

void cmd_brc(const Options& o, std::ostream& out) {
  const BrcVerdict verdict = brc_check(o.n, o.k, o.lambda);
  if (o.json) {
    out << brc_json(o.n, o.k, o.lambda, verdict).dump() << '\n';
  } else {
    out << verdict.summary() << '\n';
  }
}

void cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const DesignParams params{o.b, o.n, o.r, o.k, o.lambda};
  SearchBudget budget;
  budget.max_nodes = o.max_nodes;
  budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(o.time_limit_s * 1000));
  const auto start = std::chrono::steady_clock::now();
  const SearchOutcome outcome = search_design(params, budget);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
  err << "search " << to_string(outcome.status) << " in " << elapsed.count() << " s\n";

  if (outcome.design && !o.out_path.empty()) save_design(*outcome.design, o.out_path);
  if (o.json) {
    json doc{{"status", to_string(outcome.status)},
             {"params", params_json(params)},
             {"nodes", {{"generated", outcome.stats.generated},
                        {"explored", outcome.stats.explored},
                        {"pruned", outcome.stats.pruned}}},
             {"design", nullptr}};
    if (outcome.design) doc["design"] = design_to_json(*outcome.design);
    out << doc.dump() << '\n';
    return;
  }
  out << to_string(outcome.status) << ' ' << params.to_string() << " after "
      << outcome.stats.generated << " nodes\n";
  if (outcome.design) out << design_to_json(*outcome.design).dump() << '\n';
}

void cmd_catalog(const Options& o, std::ostream& out) {
  if (!o.catalog_name.empty()) {
    const CatalogEntry& entry = get_design(o.catalog_name);
    if (o.json) {
      out << json{{"name", entry.name},
                  {"params", params_json(entry.params)},
                  {"source", entry.source},
                  {"design", design_to_json(entry.design)}}
                 .dump()
          << '\n';
    } else {
      out << entry.name << ' ' << entry.params.to_string() << " [" << entry.source << "]\n"
          << format_design_text(entry.design);
    }
    return;
  }
  if (o.json) {
    json doc{{"designs", json::array()}, {"known_biplanes", json::array()},
             {"known_triplanes", json::array()}};
    for (const auto& name : catalog_names()) {
      const CatalogEntry& e = get_design(name);
      doc["designs"].push_back({{"name", e.name}, {"params", params_json(e.params)},
                                {"source", e.source}});
    }
    for (const auto& t : known_biplanes()) doc["known_biplanes"].push_back({t.n, t.k, t.lambda});
    for (const auto& t : known_triplanes()) doc["known_triplanes"].push_back({t.n, t.k, t.lambda});
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& name : catalog_names()) {
    const CatalogEntry& e = get_design(name);
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-22s %s\n", e.name.c_str(),
                  e.params.to_string().c_str(), e.source.c_str());
    out << line;
  }
  out << "known biplanes:";
  for (const auto& t : known_biplanes()) out << ' ' << t.to_string();
  out << "\nknown triplanes:";
  for (const auto& t : known_triplanes()) out << ' ' << t.to_string();
  out << '\n';
}

void cmd_scan(const Options& o, std::ostream& out) {
  const auto rows = pattern_scan(o.n_max);
  if (o.json) {
    for (const auto& row : rows) out << row.to_json().dump() << '\n';
  } else {
    out << render_pattern_table(rows);
  }
}

void cmd_export(const Options& o, std::ostream& out) {
  const Design design = resolve_design(o.source);
  std::string text;
  if (o.format == "dot") {
    text = export_dot(star_construct(design));
  } else if (o.format == "graph-json") {
    text = graph_to_json(star_construct(design)).dump(2) + "\n";
  } else if (o.format == "design-json") {
    text = design_to_json(design).dump(2) + "\n";
  } else {
    text = format_design_text(design);
  }
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block designs, star graphs K_n*(r,k,lambda) and biplane existence checks",
               "bigeo"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Verify a design (catalog name or file)");
  verify->add_option("source", o.source, "Catalog name or design file")->required();

  auto* construct = app.add_subcommand("construct", "Build the star graph of a design");
  construct->add_option("source", o.source, "Catalog name or design file")->required();
  construct->add_option("--dot", o.dot_path, "Write the graph as DOT");
  construct->add_option("--graph-json", o.graph_json_path, "Write the graph as JSON");

  auto* analyze = app.add_subcommand("analyze", "Build the star graph and report its metrics");
  analyze->add_option("source", o.source, "Catalog name or design file")->required();

  auto* brc = app.add_subcommand("brc", "Bruck-Ryser-Chowla test for a symmetric design");
  brc->add_option("n", o.n, "Number of points")->required();
  brc->add_option("k", o.k, "Block size")->required();
  brc->add_option("lambda", o.lambda, "Pair coverage")->required();

  auto* search = app.add_subcommand("search", "Backtracking search for a design");
  search->add_option("b", o.b)->required();
  search->add_option("n", o.n)->required();
  search->add_option("r", o.r)->required();
  search->add_option("k", o.k)->required();
  search->add_option("lambda", o.lambda)->required();
  search->add_option("--max-nodes", o.max_nodes, "Node budget")->check(CLI::PositiveNumber);
  search->add_option("--time-limit", o.time_limit_s, "Wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", o.out_path, "Save the found design (.json or text)");

  auto* catalog = app.add_subcommand("catalog", "List built-in designs or print one");
  catalog->add_option("name", o.catalog_name, "Catalog entry to print");

  auto* scan = app.add_subcommand("scan", "Biplane existence-pattern scan for n in [2, n_max]");
  scan->add_option("n_max", o.n_max)->required();

  auto* exporter = app.add_subcommand("export", "Export a design or its star graph");
  exporter->add_option("source", o.source, "Catalog name or design file")->required();
  exporter->add_option("--format", o.format, "dot | graph-json | design-json | design-text")
      ->check(CLI::IsMember({"dot", "graph-json", "design-json", "design-text"}));
  exporter->add_option("--out", o.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (verify->parsed()) cmd_verify(o, out);
    if (construct->parsed()) cmd_construct(o, out);
    if (analyze->parsed()) cmd_analyze(o, out);
    if (brc->parsed()) cmd_brc(o, out);
    if (search->parsed()) cmd_search(o, out, err);
    if (catalog->parsed()) cmd_catalog(o, out);
    if (scan->parsed()) cmd_scan(o, out);
    if (exporter->parsed()) cmd_export(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace bigeo::cli
