#include "milnorfiber/jsonio.hpp"

#include <algorithm>
#include <sstream>

namespace mf {

namespace {

Rat rat_from_str(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw input_error("bad rational: " + s);
  r.canonicalize();
  return r;
}

Json rat_json(const Rat& q) { return Json(q.get_str()); }

}  // namespace

Json graph_to_json(const DecoratedGraph& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["vertices"] = Json::array();
  auto verts = g.vertices;
  std::sort(verts.begin(), verts.end(),
            [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
  for (const auto& v : verts) {
    Json jv;
    jv["id"] = v.id;
    jv["m"] = v.m;
    jv["l"] = v.l;
    jv["euler"] = v.euler;
    j["vertices"].push_back(jv);
  }
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  j["edges"] = Json::array();
  for (const auto& [a, b] : edges) j["edges"].push_back(Json::array({a, b}));
  auto arrows_json = [](const std::vector<GraphArrow>& as) {
    Json arr = Json::array();
    auto sorted = as;
    std::sort(sorted.begin(), sorted.end(),
              [](const GraphArrow& x, const GraphArrow& y) { return x.id < y.id; });
    for (const auto& a : sorted) {
      Json ja;
      ja["id"] = a.id;
      ja["attach"] = a.attach;
      ja["alpha"] = a.alpha;
      arr.push_back(ja);
    }
    return arr;
  };
  j["f_arrows"] = arrows_json(g.f_arrows);
  j["g_arrows"] = arrows_json(g.g_arrows);
  return j;
}

DecoratedGraph graph_from_json(const Json& j) {
  DecoratedGraph g;
  if (!j.contains("vertices")) throw input_error("graph JSON lacks \"vertices\"");
  for (const auto& jv : j.at("vertices")) {
    GraphVertex v;
    v.id = jv.at("id").get<int>();
    v.m = jv.at("m").get<long>();
    v.l = jv.at("l").get<long>();
    v.euler = jv.at("euler").get<long>();
    g.vertices.push_back(v);
  }
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
  if (j.contains("edges"))
    for (const auto& je : j.at("edges")) {
      int a = je.at(0).get<int>(), b = je.at(1).get<int>();
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(g.edges.begin(), g.edges.end());
  auto read_arrows = [&j](const char* key, std::vector<GraphArrow>& out) {
    if (!j.contains(key)) return;
    for (const auto& ja : j.at(key)) {
      GraphArrow a;
      a.id = ja.at("id").get<int>();
      a.attach = ja.at("attach").get<int>();
      a.alpha = ja.at("alpha").get<long>();
      out.push_back(a);
    }
    std::sort(out.begin(), out.end(),
              [](const GraphArrow& x, const GraphArrow& y) { return x.id < y.id; });
  };
  read_arrows("f_arrows", g.f_arrows);
  read_arrows("g_arrows", g.g_arrows);
  validate_graph(g);
  return g;
}

std::string graph_to_dot(const DecoratedGraph& g) {
  std::ostringstream os;
  os << "graph resolution {\n";
  auto verts = g.vertices;
  std::sort(verts.begin(), verts.end(),
            [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
  for (const auto& v : verts)
    os << "  v" << v.id << " [shape=circle, label=\"(" << v.m << ", " << v.l
       << ") e=" << v.euler << "\"];\n";
  for (const auto& a : g.f_arrows)
    os << "  f" << a.id << " [shape=rarrow, label=\"f:" << a.alpha << "\"];\n";
  for (const auto& a : g.g_arrows)
    os << "  g" << a.id << " [shape=rarrow, label=\"g:" << a.alpha << "\"];\n";
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  for (const auto& a : g.f_arrows) os << "  v" << a.attach << " -- f" << a.id << ";\n";
  for (const auto& a : g.g_arrows) os << "  v" << a.attach << " -- g" << a.id << ";\n";
  os << "}\n";
  return os.str();
}

DecoratedGraph graph_from_dot(const std::string& text) {
  DecoratedGraph g;
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::pair<char, int>> arrow_names;  // name -> (kind, id)
  while (std::getline(in, line)) {
    // strip comments and whitespace
    auto strip = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      std::size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty() || line[0] == '}' || line.rfind("graph", 0) == 0 || line[0] == '#' ||
        line.rfind("//", 0) == 0)
      continue;
    std::size_t dd = line.find("--");
    if (dd != std::string::npos) {
      std::string a = strip(line.substr(0, dd));
      std::string b = strip(line.substr(dd + 2));
      if (!b.empty() && b.back() == ';') b.pop_back();
      b = strip(b);
      auto node_id = [](const std::string& s) -> std::pair<char, int> {
        if (s.size() < 2) throw input_error("bad DOT node name: " + s);
        char k = s[0];
        if (k != 'v' && k != 'f' && k != 'g') throw input_error("bad DOT node name: " + s);
        return {k, std::stoi(s.substr(1))};
      };
      auto [ka, ia] = node_id(a);
      auto [kb, ib] = node_id(b);
      if (ka == 'v' && kb == 'v') {
        g.edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
      } else {
        // vertex -- arrow (either order)
        char kind = ka == 'v' ? kb : ka;
        int aid = ka == 'v' ? ib : ia;
        int vid = ka == 'v' ? ia : ib;
        auto& arrows = kind == 'f' ? g.f_arrows : g.g_arrows;
        bool found = false;
        for (auto& ar : arrows)
          if (ar.id == aid) {
            ar.attach = vid;
            found = true;
          }
        if (!found) throw input_error("DOT edge references undeclared arrow");
      }
      continue;
    }
    std::size_t br = line.find('[');
    if (br == std::string::npos) continue;
    std::string name = strip(line.substr(0, br));
    std::size_t lb = line.find("label=\"", br);
    if (lb == std::string::npos) throw input_error("DOT node without label: " + line);
    lb += 7;
    std::size_t le = line.find('"', lb);
    std::string label = line.substr(lb, le - lb);
    if (name.empty()) throw input_error("bad DOT line: " + line);
    if (name[0] == 'v') {
      GraphVertex v;
      v.id = std::stoi(name.substr(1));
      // label "(m, l) e=E"
      long m, l, e;
      if (std::sscanf(label.c_str(), "(%ld, %ld) e=%ld", &m, &l, &e) != 3)
        throw input_error("bad vertex label: " + label);
      v.m = m;
      v.l = l;
      v.euler = e;
      g.vertices.push_back(v);
    } else if (name[0] == 'f' || name[0] == 'g') {
      GraphArrow a;
      a.id = std::stoi(name.substr(1));
      long alpha;
      char kindc;
      if (std::sscanf(label.c_str(), "%c:%ld", &kindc, &alpha) != 2)
        throw input_error("bad arrow label: " + label);
      a.alpha = alpha;
      a.attach = -1;
      (name[0] == 'f' ? g.f_arrows : g.g_arrows).push_back(a);
    }
  }
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
  std::sort(g.edges.begin(), g.edges.end());
  for (const auto& a : g.f_arrows)
    if (a.attach < 0) throw input_error("f-arrow has no attaching edge");
  for (const auto& a : g.g_arrows)
    if (a.attach < 0) throw input_error("g-arrow has no attaching edge");
  validate_graph(g);
  return g;
}

Json zeta_to_json(const CycloProduct& z) {
  Json j;
  j["factors"] = Json::array();
  for (const auto& [k, e] : z.exps) {
    Json f;
    f["k"] = k;
    f["e"] = e;
    j["factors"].push_back(f);
  }
  j["pretty"] = cyclo_str(z);
  auto ex = cyclo_expand(z);
  j["numerator"] = Json::array();
  for (const auto& c : ex.num) j["numerator"].push_back(c.get_str());
  j["denominator"] = Json::array();
  for (const auto& c : ex.den) j["denominator"].push_back(c.get_str());
  j["valuation_at_infinity"] = valuation_at_infinity(z);
  return j;
}

namespace {

Json branch_to_json(const PuiseuxBranch& b) {
  Json j;
  j["e"] = b.e;
  j["alpha"] = b.alpha;
  j["orbit_size"] = b.orbit_size;
  j["char_exponents"] = Json::array();
  for (const auto& c : b.char_exponents) j["char_exponents"].push_back(rat_json(c));
  j["mult_sequence"] = b.mult_sequence;
  j["splitting"] = Json::array();
  for (const auto& [exp, n] : b.splitting)
    j["splitting"].push_back(Json::array({rat_json(exp), n}));
  return j;
}

PuiseuxBranch branch_from_json(const Json& j, int germ) {
  PuiseuxBranch b;
  b.germ = germ;
  b.e = j.at("e").get<long>();
  b.alpha = j.at("alpha").get<long>();
  b.orbit_size = j.at("orbit_size").get<long>();
  for (const auto& c : j.at("char_exponents"))
    b.char_exponents.push_back(rat_from_str(c.get<std::string>()));
  b.mult_sequence = j.at("mult_sequence").get<std::vector<long>>();
  if (j.contains("splitting"))
    for (const auto& s : j.at("splitting"))
      b.splitting.emplace_back(rat_from_str(s.at(0).get<std::string>()), s.at(1).get<long>());
  // integrity: stored sequence must match its regeneration
  auto regen = mult_sequence_from_chars(b.e, b.char_exponents);
  if (regen != b.mult_sequence)
    throw input_error("mult_sequence does not match its characteristic exponents");
  return b;
}

}  // namespace

Json branches_to_json(const PairExpansion& ex) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["shear"] = ex.shear_c;
  j["f_branches"] = Json::array();
  j["g_branches"] = Json::array();
  for (const auto& b : ex.branches)
    (b.germ == 0 ? j["f_branches"] : j["g_branches"]).push_back(branch_to_json(b));
  j["contacts"] = Json::array();
  for (const auto& c : ex.contacts) {
    Json jc;
    jc["b1"] = c.b1;
    jc["b2"] = c.b2;
    jc["contact_exponent"] = rat_json(c.contact_exponent);
    jc["intersection_multiplicity"] = c.intersection_multiplicity;
    jc["prefix_levels"] = Json::array();
    for (const auto& [exp, n] : c.prefix_levels)
      jc["prefix_levels"].push_back(Json::array({rat_json(exp), n}));
    j["contacts"].push_back(jc);
  }
  return j;
}

PairExpansion branches_from_json(const Json& j) {
  PairExpansion ex;
  ex.shear_c = j.value("shear", 1L);
  for (const auto& jb : j.at("f_branches")) ex.branches.push_back(branch_from_json(jb, 0));
  for (const auto& jb : j.at("g_branches")) ex.branches.push_back(branch_from_json(jb, 1));
  ex.curve_only = j.at("g_branches").empty();
  for (const auto& jc : j.at("contacts")) {
    ContactRecord c;
    c.b1 = jc.at("b1").get<int>();
    c.b2 = jc.at("b2").get<int>();
    c.contact_exponent = rat_from_str(jc.at("contact_exponent").get<std::string>());
    c.intersection_multiplicity = jc.at("intersection_multiplicity").get<long>();
    if (jc.contains("prefix_levels"))
      for (const auto& s : jc.at("prefix_levels"))
        c.prefix_levels.emplace_back(rat_from_str(s.at(0).get<std::string>()),
                                     s.at(1).get<long>());
    ex.contacts.push_back(c);
  }
  return ex;
}

Json fiber_to_json(const FiberDescription& fd) {
  auto region = [](const FiberRegion& r) {
    Json j;
    j["label"] = r.label;
    j["vertices"] = r.vertices;
    j["f_arrows"] = r.f_arrows;
    j["monodromy"] = r.monodromy;
    return j;
  };
  Json j;
  j["region_F1"] = region(fd.region_F1);
  j["region_Feps"] = region(fd.region_Feps);
  j["region_W2"] = region(fd.region_W2);
  j["interface_circles"] = Json::array();
  for (const auto& ic : fd.interface_circles) {
    Json ji;
    ji["edge"] = Json::array({ic.edge.first, ic.edge.second});
    ji["count"] = ic.count;
    j["interface_circles"].push_back(ji);
  }
  j["handles"] = Json::array();
  for (const auto& h : fd.handles) {
    Json jh;
    jh["arrow"] = h.arrow;
    jh["base_vertex"] = h.base_vertex;
    jh["count"] = h.count;
    jh["twist"] = h.twist;
    jh["framing"] = h.framing;
    jh["monodromy"] = h.monodromy;
    j["handles"].push_back(jh);
  }
  return j;
}

Json surgery_to_json(const SurgeryRecord& s) {
  Json j;
  j["families"] = Json::array();
  for (const auto& f : s.families) {
    Json jf;
    jf["arrow"] = f.arrow;
    jf["base_vertex"] = f.base_vertex;
    jf["curves"] = f.curves;
    jf["coefficient"] = f.coefficient.get_str();
    jf["attach_region"] = f.attach_region;
    j["families"].push_back(jf);
  }
  return j;
}

Json coverings_to_json(const std::vector<CoveringDatum>& v) {
  Json j = Json::array();
  for (const auto& c : v) {
    Json jc;
    jc["arrow"] = c.arrow;
    jc["attach"] = c.attach;
    jc["components"] = c.components;
    jc["degree"] = c.degree;
    j.push_back(jc);
  }
  return j;
}

Json classification_to_json(const HomotopyClass& h) {
  Json j;
  switch (h.tag) {
    case HomotopyCase::CaseI:
      j["case"] = "CaseI";
      break;
    case HomotopyCase::CaseII:
      j["case"] = "CaseII";
      j["m"] = h.bouquet_m;
      break;
    case HomotopyCase::Mixed:
      j["case"] = "Mixed";
      break;
  }
  j["description"] = h.description;
  return j;
}

Json invariants_to_json(const PipelineResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["zeta_convention"] = kZetaConvention;
  Json input;
  if (!r.f.is_zero()) input["f"] = print_poly(r.f);
  if (!r.g.is_zero()) input["g"] = print_poly(r.g);
  if (!r.f.is_zero()) input["shear"] = r.shear;
  input["mode"] = r.curve_only ? "curve" : "pair";
  j["input"] = input;
  j["graph"] = graph_to_json(r.graph);
  j["zeta"] = zeta_to_json(r.zeta);
  j["chi"] = r.chi;
  j["valuation_at_infinity"] = valuation_at_infinity(r.zeta);
  if (r.cls) j["classification"] = classification_to_json(*r.cls);
  if (r.fd) j["fiber_description"] = fiber_to_json(*r.fd);
  if (r.surgery) j["boundary_surgery"] = surgery_to_json(*r.surgery);
  // curve mode always; pair mode in Case I, where F ~ F_{f,sing} and the
  // covering data of f's own resolution makes the identification concrete
  if (r.curve_only || !r.coverings.empty())
    j["boundary_covering"] = coverings_to_json(r.coverings);
  return j;
}

Json report_to_json(const ConsistencyReport& rep) {
  Json j;
  j["f"] = rep.input_f;
  j["g"] = rep.input_g;
  j["pass"] = rep.pass;
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  return j;
}

std::string render_text_invariants(const PipelineResult& r) {
  std::ostringstream os;
  if (r.curve_only) {
    os << "mode: plane curve\n";
    if (!r.f.is_zero()) os << "f = " << print_poly(r.f) << "\n";
  } else {
    os << "mode: germ pair Phi = f + z*g\n";
    if (!r.f.is_zero()) os << "f = " << print_poly(r.f) << "\n";
    if (!r.g.is_zero()) os << "g = " << print_poly(r.g) << "\n";
  }
  if (!r.f.is_zero()) os << "shear: x <- x + (" << r.shear << ")*y\n";
  os << "vertices: " << r.graph.vertices.size() << ", f-arrows: " << r.graph.f_arrows.size()
     << ", g-arrows: " << r.graph.g_arrows.size() << "\n";
  os << "zeta (" << kZetaConvention << " convention): " << cyclo_str(r.zeta) << "\n";
  os << "chi: " << r.chi << "  (valuation at infinity: " << valuation_at_infinity(r.zeta)
     << ")\n";
  if (r.cls) os << "classification: " << r.cls->description << "\n";
  if (r.fd) {
    os << "handles:\n";
    for (const auto& h : r.fd->handles)
      os << "  g-arrow " << h.arrow << " at v" << h.base_vertex << ": count " << h.count
         << ", twist " << h.twist << ", framing " << h.framing << ", monodromy: " << h.monodromy
         << "\n";
  }
  if (r.surgery) {
    os << "boundary surgery:\n";
    for (const auto& f : r.surgery->families)
      os << "  " << f.curves << " curve(s) with coefficient " << f.coefficient.get_str()
         << " at g-arrow " << f.arrow << "\n";
  }
  if (r.curve_only || !r.coverings.empty()) {
    os << (r.curve_only ? "boundary covering data:\n"
                        : "boundary covering data of f (fiber ~ F_{f,sing}):\n");
    for (const auto& c : r.coverings)
      os << "  f-arrow " << c.arrow << " at v" << c.attach << ": " << c.components
         << " component(s) of degree " << c.degree << "\n";
  }
  return os.str();
}

std::string render_text_report(const ConsistencyReport& rep) {
  std::ostringstream os;
  os << (rep.pass ? "PASS" : "FAIL") << "  f = " << rep.input_f;
  if (!rep.input_g.empty()) os << ", g = " << rep.input_g;
  os << "\n";
  for (const auto& c : rep.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.pass) os << "  expected: " << c.expected << "  actual: " << c.actual;
    os << "\n";
  }
  return os.str();
}

}  // namespace mf
