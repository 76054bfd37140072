#include "milnorfiber/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "milnorfiber/jsonio.hpp"

namespace mf {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string command;
  std::string f_text, g_text;
  bool curve_only = false;
  std::string graph_file, branches_file;
  std::string format = "text";
  std::string out_path;
  bool no_meta = false;
  std::string corpus_dir;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw input_error("cannot write file: " + cfg.out_path);
  f << payload;
}

Json meta_json() {
  Json m;
  m["tool"] = "milnorfiber";
  m["version"] = "0.1.0";
  auto now = std::chrono::system_clock::now();
  m["generated_at"] = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  return m;
}

std::string json_payload(const RunConfig& cfg, Json body) {
  if (!cfg.no_meta) body["meta"] = meta_json();
  return body.dump(2) + "\n";
}

// Build the pipeline result from whichever input mode is active.
PipelineResult load_result(const RunConfig& cfg) {
  int modes = (!cfg.f_text.empty()) + (!cfg.graph_file.empty()) + (!cfg.branches_file.empty());
  if (modes != 1)
    throw input_error("exactly one input mode: -f [-g] | --graph FILE | --branches FILE");
  if (!cfg.graph_file.empty()) {
    std::string text = slurp(cfg.graph_file);
    DecoratedGraph g;
    try {
      // accept JSON or DOT
      std::size_t i = text.find_first_not_of(" \t\r\n");
      if (i != std::string::npos && (text[i] == '{'))
        g = graph_from_json(Json::parse(text));
      else
        g = graph_from_dot(text);
    } catch (const input_error&) {
      throw;
    } catch (const std::exception& e) {
      throw input_error("bad graph file " + cfg.graph_file + ": " + e.what());
    }
    return invariants_from_graph(g);
  }
  if (!cfg.branches_file.empty()) {
    PairExpansion ex;
    try {
      ex = branches_from_json(Json::parse(slurp(cfg.branches_file)));
    } catch (const input_error&) {
      throw;
    } catch (const std::exception& e) {
      throw input_error("bad branches file " + cfg.branches_file + ": " + e.what());
    }
    PipelineResult r;
    r.curve_only = ex.curve_only;
    r.expansion = ex;
    r.shear = ex.shear_c;
    r.cluster = build_cluster(ex.branches, ex.contacts);
    r.graph = to_dual_graph(r.cluster);
    if (r.curve_only) {
      r.zeta = zeta_acampo(r.graph);
      r.chi = valuation_at_infinity(r.zeta);
      r.coverings = boundary_covering_data(r.graph);
    } else {
      r.part = partition(r.graph);
      r.zeta = zeta_phi(r.graph, *r.part);
      r.chi = euler_char(r.graph, *r.part);
      r.cls = classify(r.graph, *r.part);
      r.fd = fiber_description(r.graph, *r.part);
      r.surgery = boundary_surgery(*r.fd);
    }
    return r;
  }
  BiPoly f = parse_poly(cfg.f_text);
  BiPoly g;
  bool curve = cfg.curve_only;
  if (!cfg.g_text.empty()) {
    if (curve) throw input_error("--curve-only cannot be combined with -g");
    g = parse_poly(cfg.g_text);
  } else {
    if (!curve) throw input_error("either give -g or pass --curve-only");
  }
  return run_pipeline(f, g, curve);
}

int cmd_resolve(const RunConfig& cfg, std::ostream& out) {
  PipelineResult r = load_result(cfg);
  if (cfg.format == "json") {
    Json j = graph_to_json(r.graph);
    emit(cfg, out, json_payload(cfg, std::move(j)));
  } else if (cfg.format == "dot") {
    std::string dot = graph_to_dot(r.graph);
    if (!cfg.no_meta) dot = "// milnorfiber resolution graph\n" + dot;
    emit(cfg, out, dot);
  } else {
    std::ostringstream os;
    os << "resolution graph (" << r.graph.vertices.size() << " vertices)\n";
    for (const auto& v : r.graph.vertices)
      os << "  v" << v.id << ": m=" << v.m << " l=" << v.l << " euler=" << v.euler << "\n";
    for (const auto& [a, b] : r.graph.edges) os << "  edge v" << a << " -- v" << b << "\n";
    for (const auto& a : r.graph.f_arrows)
      os << "  f-arrow " << a.id << " at v" << a.attach << " (alpha=" << a.alpha << ")\n";
    for (const auto& a : r.graph.g_arrows)
      os << "  g-arrow " << a.id << " at v" << a.attach << " (alpha=" << a.alpha << ")\n";
    emit(cfg, out, os.str());
  }
  return 0;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out, const std::string& only = "") {
  PipelineResult r = load_result(cfg);
  if (cfg.format == "dot")
    throw input_error("dot format is only available for the resolve command");
  bool json = cfg.format == "json";
  Json full = invariants_to_json(r);
  if (only.empty()) {
    if (json)
      emit(cfg, out, json_payload(cfg, full));
    else
      emit(cfg, out, render_text_invariants(r));
    return 0;
  }
  if (only == "zeta") {
    if (json)
      emit(cfg, out, json_payload(cfg, full["zeta"]));
    else
      emit(cfg, out, cyclo_str(r.zeta) + "\n");
  } else if (only == "chi") {
    if (json) {
      Json j;
      j["chi"] = r.chi;
      emit(cfg, out, json_payload(cfg, j));
    } else {
      emit(cfg, out, std::to_string(r.chi) + "\n");
    }
  } else if (only == "classify") {
    if (r.curve_only) throw input_error("classify needs a germ pair");
    if (json)
      emit(cfg, out, json_payload(cfg, full["classification"]));
    else
      emit(cfg, out, r.cls->description + "\n");
  } else if (only == "fiber") {
    if (r.curve_only) throw input_error("fiber needs a germ pair");
    if (json)
      emit(cfg, out, json_payload(cfg, full["fiber_description"]));
    else {
      std::ostringstream os;
      os << "fiber description:\n";
      os << "  region F1 (" << r.fd->region_F1.label << "): vertices";
      for (int v : r.fd->region_F1.vertices) os << " v" << v;
      os << "; monodromy " << r.fd->region_F1.monodromy << "\n";
      os << "  region Feps (" << r.fd->region_Feps.label
         << "): monodromy " << r.fd->region_Feps.monodromy << "\n";
      os << "  region W2 (" << r.fd->region_W2.label << "): vertices";
      for (int v : r.fd->region_W2.vertices) os << " v" << v;
      os << "; monodromy " << r.fd->region_W2.monodromy << "\n";
      for (const auto& ic : r.fd->interface_circles)
        os << "  interface circles on edge (v" << ic.edge.first << ", v" << ic.edge.second
           << "): " << ic.count << "\n";
      for (const auto& h : r.fd->handles)
        os << "  handle family at g-arrow " << h.arrow << " (v" << h.base_vertex
           << "): count " << h.count << ", twist " << h.twist << ", framing " << h.framing
           << ", monodromy: " << h.monodromy << "\n";
      emit(cfg, out, os.str());
    }
  } else if (only == "boundary") {
    if (r.curve_only) {
      if (json)
        emit(cfg, out, json_payload(cfg, full["boundary_covering"]));
      else {
        std::ostringstream os;
        for (const auto& c : r.coverings)
          os << "f-arrow " << c.arrow << " at v" << c.attach << ": " << c.components
             << " component(s), covering degree " << c.degree << "\n";
        emit(cfg, out, os.str());
      }
    } else {
      if (json)
        emit(cfg, out, json_payload(cfg, full["boundary_surgery"]));
      else {
        std::ostringstream os;
        for (const auto& fam : r.surgery->families)
          os << fam.curves << " surgery curve(s) with coefficient " << fam.coefficient.get_str()
             << " along g-arrow " << fam.arrow << " (" << fam.attach_region << ")\n";
        emit(cfg, out, os.str());
      }
    }
  }
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.corpus_dir.empty()) throw input_error("check needs --corpus DIR");
  if (!fs::is_directory(cfg.corpus_dir)) throw input_error("not a directory: " + cfg.corpus_dir);
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(cfg.corpus_dir)) {
    if (e.path().extension() == ".germ") entries.push_back(e.path());
  }
  std::sort(entries.begin(), entries.end());
  if (entries.empty()) {
    err << "warning: empty corpus\n";
    emit(cfg, out, cfg.format == "json" ? json_payload(cfg, Json::array()) : "empty corpus\n");
    return 0;
  }

  auto run_entry = [](const fs::path& path) -> ConsistencyReport {
    ConsistencyReport rep;
    try {
      GermPairFile gp = parse_germ_file(slurp(path.string()));
      if (!gp.g) throw input_error("corpus entry lacks g: " + path.string());
      rep = consistency_report(gp.f, *gp.g);
      // optional golden comparison
      fs::path golden = path;
      golden.replace_extension(".expected.json");
      if (fs::exists(golden)) {
        PipelineResult r = run_pipeline(gp.f, *gp.g, false);
        Json got = invariants_to_json(r);
        Json want = Json::parse(slurp(golden.string()));
        rep.add("golden", "match", got == want ? "match" : "MISMATCH");
      }
    } catch (const std::exception& ex) {
      rep.input_f = path.filename().string();
      rep.add_error("entry", ex.what());
    }
    return rep;
  };

  std::vector<std::future<ConsistencyReport>> futs;
  futs.reserve(entries.size());
  for (const auto& p : entries)
    futs.push_back(std::async(std::launch::async, run_entry, p));

  bool all = true;
  Json jall = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ConsistencyReport rep = futs[i].get();
    all = all && rep.pass;
    Json jr = report_to_json(rep);
    jr["entry"] = entries[i].filename().string();
    jall.push_back(jr);
    os << entries[i].filename().string() << ": " << render_text_report(rep);
  }
  os << (all ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << " (" << entries.size()
     << " entries)\n";
  if (cfg.format == "json")
    emit(cfg, out, json_payload(cfg, jall));
  else
    emit(cfg, out, os.str());
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor-fiber invariants of f(x,y) + z*g(x,y) from the common embedded "
               "resolution of the plane curve pair (f, g)"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool input_modes = true) {
    if (input_modes) {
      sub->add_option("-f", cfg.f_text, "germ f as a polynomial in x, y");
      sub->add_option("-g", cfg.g_text, "germ g as a polynomial in x, y");
      sub->add_flag("--curve-only", cfg.curve_only, "plane-curve mode (no g)");
      sub->add_option("--graph", cfg.graph_file, "ingest a resolution graph (JSON or DOT)");
      sub->add_option("--branches", cfg.branches_file, "ingest a branches file (JSON)");
    }
    sub->add_option("--format", cfg.format, "text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", cfg.out_path, "write output to a file");
    sub->add_flag("--no-meta", cfg.no_meta, "suppress the metadata header");
  };

  auto* c_resolve = app.add_subcommand("resolve", "decorated common resolution graph");
  add_common(c_resolve);
  auto* c_inv = app.add_subcommand("invariants", "zeta, chi, classification, fiber, surgery");
  add_common(c_inv);
  auto* c_zeta = app.add_subcommand("zeta", "monodromy zeta function");
  add_common(c_zeta);
  auto* c_chi = app.add_subcommand("chi", "Euler characteristic of the fiber");
  add_common(c_chi);
  auto* c_cls = app.add_subcommand("classify", "homotopy-type classification");
  add_common(c_cls);
  auto* c_fib = app.add_subcommand("fiber", "handle decomposition description");
  add_common(c_fib);
  auto* c_bnd = app.add_subcommand("boundary", "boundary surgery / covering data");
  add_common(c_bnd);
  auto* c_chk = app.add_subcommand("check", "run the consistency suite over a corpus");
  c_chk->add_option("--corpus", cfg.corpus_dir, "directory of .germ files")->required();
  add_common(c_chk, false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with exit 0
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_resolve->parsed()) return cmd_resolve(cfg, out);
    if (c_inv->parsed()) return cmd_invariants(cfg, out);
    if (c_zeta->parsed()) return cmd_invariants(cfg, out, "zeta");
    if (c_chi->parsed()) return cmd_invariants(cfg, out, "chi");
    if (c_cls->parsed()) return cmd_invariants(cfg, out, "classify");
    if (c_fib->parsed()) return cmd_invariants(cfg, out, "fiber");
    if (c_bnd->parsed()) return cmd_invariants(cfg, out, "boundary");
    if (c_chk->parsed()) return cmd_check(cfg, out, err);
    throw input_error("no subcommand");
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mf
