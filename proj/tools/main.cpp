// knotres: validate special alternating diagrams, build Tait graphs, and
// compute the FP invariant and friends with exact rational arithmetic.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotres/diagram.hpp"
#include "knotres/error.hpp"
#include "knotres/exactlinalg.hpp"
#include "knotres/flype.hpp"
#include "knotres/invariants.hpp"
#include "knotres/taitgraph.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct InputOpts {
  std::string input;      // file path
  std::string pd;         // inline PD text
  std::string edge_list;  // inline edge-list JSON
  std::string format;     // pd | json-diagram | edge-list | auto
  std::string output = "json";
};

void add_input_flags(CLI::App* cmd, InputOpts& o, bool diagram_only) {
  cmd->add_option("--input", o.input, "Input file (PD text or JSON)");
  cmd->add_option("--pd", o.pd, "Inline PD code");
  if (!diagram_only)
    cmd->add_option("--edge-list", o.edge_list, "Inline edge-list JSON");
  cmd->add_option("--format", o.format,
                  "Input format: pd, json-diagram, edge-list")
      ->check(CLI::IsMember({"pd", "json-diagram", "edge-list"}));
  cmd->add_option("--output", o.output, "Output style")
      ->check(CLI::IsMember({"json", "table"}));
}

fs::path resolve_path(const std::string& p) {
  if (fs::exists(p)) return p;
  if (const char* env = std::getenv("KNOTRES_DATA")) {
    fs::path alt = fs::path(env) / p;
    if (fs::exists(alt)) return alt;
  }
  knotres::fail("FileNotFound", "cannot open input '" + p + "'");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) knotres::fail("FileNotFound", "cannot open input '" + p.string() + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Load either a diagram or a bare Tait graph depending on flags/format.
struct LoadedInput {
  std::optional<knotres::Diagram> diagram;
  knotres::TaitGraph graph;
};

bool looks_like_edge_list(const std::string& text) {
  auto j = json::parse(text, nullptr, false);
  return j.is_object() && j.contains("edges") && !j.contains("crossings");
}

LoadedInput load(const InputOpts& o) {
  int sources = (!o.input.empty()) + (!o.pd.empty()) + (!o.edge_list.empty());
  if (sources != 1)
    knotres::fail("UsageError",
                  "exactly one of --input/--pd/--edge-list is required");
  LoadedInput li;
  if (!o.pd.empty()) {
    li.diagram = knotres::Diagram::parse_pd(o.pd);
    return li;
  }
  if (!o.edge_list.empty()) {
    li.graph = knotres::from_edge_list(json::parse(o.edge_list));
    return li;
  }
  std::string text = slurp(resolve_path(o.input));
  std::string fmt = o.format;
  if (fmt.empty()) {
    auto ext = fs::path(o.input).extension().string();
    if (ext == ".pd" || ext == ".txt")
      fmt = "pd";
    else if (json::accept(text))
      fmt = looks_like_edge_list(text) ? "edge-list" : "json-diagram";
    else
      fmt = "pd";
  }
  if (fmt == "edge-list") {
    li.graph = knotres::from_edge_list(json::parse(text));
    return li;
  }
  li.diagram = fmt == "pd" ? knotres::Diagram::parse_pd(text)
                           : knotres::Diagram::from_json(json::parse(text));
  return li;
}

knotres::Diagram load_diagram(const InputOpts& o) {
  LoadedInput li = load(o);
  if (!li.diagram)
    knotres::fail("UsageError", "this command needs a diagram input");
  return *li.diagram;
}

knotres::TaitGraph load_graph(const InputOpts& o) {
  LoadedInput li = load(o);
  return li.diagram ? knotres::tait_graph(*li.diagram) : li.graph;
}

json matrix_json(const knotres::RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(knotres::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_json(const knotres::Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(knotres::to_string(c));
  return a;
}

void print_matrix_table(const knotres::RationalMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t w = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(knotres::to_string(m.at(i, j)));
      w = std::max(w, cells[i].back().size());
    }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) std::cout << ' ';
      std::cout << std::string(w - row[j].size(), ' ') << row[j];
    }
    std::cout << '\n';
  }
}

void emit(const json& j, const std::string& output) {
  if (output == "table" && j.is_object()) {
    for (const auto& [k, v] : j.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
}

int run_batch(const std::string& manifest_path, const std::string& output) {
  fs::path mp = resolve_path(manifest_path);
  fs::path base = mp.parent_path();
  std::istringstream in(slurp(mp));
  std::string line;
  struct Row {
    std::string name;
    bool ok = false;
    knotres::Rational fp;
    std::string error;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    auto pct = line.find('%');
    if (pct != std::string::npos) line.erase(pct);
    std::istringstream ls(line);
    std::string name, file;
    if (!(ls >> name >> file)) continue;
    Row r;
    r.name = name;
    try {
      fs::path p = file;
      if (!fs::exists(p) && fs::exists(base / p)) p = base / p;
      InputOpts o;
      o.input = p.string();
      r.fp = knotres::fp(knotres::laplacian(load_graph(o)));
      r.ok = true;
    } catch (const knotres::Error& e) {
      r.error = e.kind();
    }
    rows.push_back(std::move(r));
  }
  // group by FP value, ascending
  std::map<knotres::Rational, std::vector<std::string>> groups;
  for (const auto& r : rows)
    if (r.ok) groups[r.fp].push_back(r.name);
  if (output == "table") {
    for (const auto& [v, names] : groups) {
      std::cout << knotres::to_string(v) << " :";
      for (const auto& n : names) std::cout << ' ' << n;
      std::cout << '\n';
    }
    for (const auto& r : rows)
      if (!r.ok) std::cout << "failed : " << r.name << " (" << r.error << ")\n";
  } else {
    json j;
    auto& rs = j["rows"] = json::array();
    for (const auto& [v, names] : groups)
      rs.push_back({{"fp", knotres::to_string(v)}, {"knots", names}});
    auto& fl = j["failures"] = json::array();
    for (const auto& r : rows)
      if (!r.ok) fl.push_back({{"name", r.name}, {"error", r.error}});
    std::cout << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact FP invariant of special alternating link diagrams"};
  app.require_subcommand(1);

  InputOpts opts;
  std::size_t delete_vertex = 0;
  bool raw_alexander = false;
  int depth = 2;
  std::size_t budget = 10000;
  std::string tangle_spec, manifest;

  auto* c_validate = app.add_subcommand("validate", "Check diagram acceptance");
  add_input_flags(c_validate, opts, true);
  auto* c_tait = app.add_subcommand("tait", "Emit the Tait graph edge list");
  add_input_flags(c_tait, opts, true);
  auto* c_lap = app.add_subcommand("laplacian", "Emit the Laplacian matrix");
  add_input_flags(c_lap, opts, false);
  auto* c_fp = app.add_subcommand("fp", "Compute FP = trace(L^T L+)");
  add_input_flags(c_fp, opts, false);
  auto* c_report = app.add_subcommand("report", "Full invariant report");
  add_input_flags(c_report, opts, false);
  auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial");
  add_input_flags(c_alex, opts, false);
  c_alex->add_option("--delete-vertex", delete_vertex,
                     "Vertex removed to form the Seifert matrix");
  c_alex->add_flag("--raw", raw_alexander, "Skip unit normalization");
  auto* c_chi = app.add_subcommand("charpoly",
                                   "Characteristic polynomial det(L - xI)");
  add_input_flags(c_chi, opts, false);
  auto* c_res = app.add_subcommand("resistance", "Effective resistance matrix");
  add_input_flags(c_res, opts, false);
  auto* c_flist = app.add_subcommand("flype-list", "List flype sites");
  add_input_flags(c_flist, opts, true);
  auto* c_fapply = app.add_subcommand("flype-apply", "Apply one flype");
  add_input_flags(c_fapply, opts, true);
  c_fapply
      ->add_option("--tangle", tangle_spec,
                   "Tangle JSON {crossings:[...], pivot:k} or a file path")
      ->required();
  auto* c_orbit = app.add_subcommand("orbit", "Flype-orbit invariance harness");
  add_input_flags(c_orbit, opts, true);
  c_orbit->add_option("--depth", depth, "Maximum number of flype applications");
  c_orbit->add_option("--budget", budget, "Orbit node budget");
  auto* c_batch = app.add_subcommand("batch", "FP table for a manifest");
  c_batch->add_option("--manifest,manifest", manifest, "Manifest file")
      ->required();
  c_batch->add_option("--output", opts.output, "Output style")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_validate->parsed()) {
      auto d = load_diagram(opts);
      auto v = d.validate();
      if (!v.accepted()) {
        std::cout << json{{"error", v.failure()}}.dump() << '\n';
        return 1;
      }
      emit({{"accepted", true},
            {"crossings", d.crossing_count()},
            {"components", d.component_count()},
            {"sign", d.crossings().front().sign}},
           opts.output);
    } else if (c_tait->parsed()) {
      emit(knotres::tait_graph(load_diagram(opts)).to_json(), opts.output);
    } else if (c_lap->parsed()) {
      auto L = knotres::laplacian(load_graph(opts));
      if (opts.output == "table")
        print_matrix_table(L);
      else
        std::cout << json{{"laplacian", matrix_json(L)}}.dump() << '\n';
    } else if (c_fp->parsed()) {
      auto L = knotres::laplacian(load_graph(opts));
      emit({{"fp", knotres::to_string(knotres::fp(L))}}, opts.output);
    } else if (c_report->parsed()) {
      emit(knotres::report(load_graph(opts)).to_json(), opts.output);
    } else if (c_alex->parsed()) {
      auto L = knotres::laplacian(load_graph(opts));
      auto p = knotres::alexander(L, delete_vertex, raw_alexander);
      emit({{"alexander", poly_json(p)}, {"pretty", p.str("t")}}, opts.output);
    } else if (c_chi->parsed()) {
      auto L = knotres::laplacian(load_graph(opts));
      auto p = knotres::linalg::char_poly(L);
      emit({{"char_poly", poly_json(p)}, {"pretty", p.str("x")}}, opts.output);
    } else if (c_res->parsed()) {
      auto R = knotres::resistance_matrix(knotres::laplacian(load_graph(opts)));
      if (opts.output == "table")
        print_matrix_table(R);
      else
        std::cout << json{{"resistance", matrix_json(R)}}.dump() << '\n';
    } else if (c_flist->parsed()) {
      auto d = load_diagram(opts);
      json out = json::array();
      for (const auto& t : knotres::find_flypes(d)) out.push_back(t.to_json());
      std::cout << json{{"flypes", out}}.dump() << '\n';
    } else if (c_fapply->parsed()) {
      auto d = load_diagram(opts);
      std::string spec_text = tangle_spec;
      if (!json::accept(spec_text)) spec_text = slurp(resolve_path(tangle_spec));
      auto t = knotres::TangleRegion::from_json(json::parse(spec_text));
      auto d2 = knotres::apply_flype(d, t);
      emit({{"pd", d2.to_pd()}, {"diagram", d2.to_json()}}, opts.output);
    } else if (c_orbit->parsed()) {
      auto d = load_diagram(opts);
      emit(knotres::verify_invariance(d, depth, budget).to_json(), opts.output);
    } else if (c_batch->parsed()) {
      return run_batch(manifest, opts.output);
    }
  } catch (const knotres::Error& e) {
    if (e.kind() == "UsageError") {
      std::cerr << e.what() << '\n';
      return 2;
    }
    std::cout << json{{"error", e.kind()}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cout << json{{"error", "MalformedSyntax"}, {"detail", e.what()}}.dump()
              << '\n';
    return 1;
  }
  return 0;
}
