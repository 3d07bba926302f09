// gpd: groupoids of projective line configurations.
//
// Subcommands:
//   analyze     components, auxiliary counts, vertex groups, classification
//   orbit       breadth-first orbit of a marked parameter under the groupoid
//   stabilizer  setwise stabilizer of a finite set of P^1 points
//   verify      run the built-in verification suite
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 config parse
// error, 4 mathematical precondition failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gpd/config_io.hpp"
#include "gpd/configs.hpp"
#include "gpd/d4_model.hpp"
#include "gpd/p4ext.hpp"
#include "gpd/verify.hpp"

namespace {

using nlohmann::json;
using namespace gpd;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitPrecondition = 4;

json rational_json(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1 && num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(num);
  }
  return r.str();  // exact "p/q" text for anything else
}

json element_json(const FieldElement& x) {
  json arr = json::array();
  for (const Rational& c : x.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

json point_json(const ProjPoint& p) {
  json arr = json::array();
  for (const FieldElement& c : p.coords()) arr.push_back(element_json(c));
  return arr;
}

json matrix_json(const PglMap& m) {
  return json::array(
      {json::array({element_json(m.at(0, 0)), element_json(m.at(0, 1))}),
       json::array({element_json(m.at(1, 0)), element_json(m.at(1, 1))})});
}

std::string min_poly_str(const Field& f) {
  std::ostringstream out;
  bool first = true;
  const auto& mp = f.min_poly();
  for (int i = static_cast<int>(mp.size()) - 1; i >= 0; --i) {
    if (mp[static_cast<std::size_t>(i)] == 0) continue;
    Integer c = mp[static_cast<std::size_t>(i)];
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    if (i == 0 || mag != 1) out << mag.str();
    if (i >= 1) {
      out << f.symbol();
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string field_str(const Field& f) {
  if (f.degree() == 1 && f.min_poly()[0] == 0) return "Q";
  return "Q[" + f.symbol() + "]/(" + min_poly_str(f) + ")";
}

std::string label_str(const GroupLabel& l) {
  if (l.kind == GroupKind::Dihedral && l.order == 6) return "D(6) (= S3)";
  return l.str();
}

std::string hist_str(const std::map<int, int>& h) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : h) {
    if (!first) out << ", ";
    out << k << ":" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

json hist_json(const std::map<int, int>& h) {
  json out = json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

struct SourceArgs {
  std::string builtin_name;
  std::string config_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--builtin", builtin_name,
                    "built-in configuration (quadric4, d4, d4sub6, penrose, "
                    "penrose_half, klein, p4_25)");
    cmd->add_option("--config", config_path, "configuration document (JSON)");
  }

  Configuration load() const {
    if (builtin_name.empty() == config_path.empty()) {
      throw CLI::ValidationError(
          "source", "exactly one of --builtin / --config is required");
    }
    if (!builtin_name.empty()) {
      auto b = builtin_from_name(builtin_name);
      if (!b) {
        throw CLI::ValidationError("--builtin",
                                   "unknown builtin '" + builtin_name + "'");
      }
      return builtin(*b);
    }
    std::ifstream in(config_path);
    if (!in) {
      throw ParseError("cannot open config file: " + config_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
  }
};

ProjPoint parse_point_arg(const Field& f, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    json j = json::parse(text);
    if (!j.is_array() || j.size() != 2) {
      throw ParseError("point must be a JSON array of two coefficients");
    }
    std::vector<FieldElement> coords;
    for (const json& cj : j) {
      if (cj.is_number_integer()) {
        coords.push_back(f.integer(cj.get<long long>()));
      } else if (cj.is_array()) {
        std::vector<Rational> cs;
        for (const json& x : cj) cs.emplace_back(x.get<long long>());
        coords.push_back(f.element(std::move(cs)));
      } else {
        throw ParseError("point coefficient must be an integer or array");
      }
    }
    return ProjPoint(std::move(coords));
  }
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError("point must be 'a,b' or a JSON coefficient pair");
  }
  try {
    long long a = std::stoll(text.substr(0, comma));
    long long b = std::stoll(text.substr(comma + 1));
    return ProjPoint({f.integer(a), f.integer(b)});
  } catch (const std::exception&) {
    throw ParseError("cannot parse point '" + text + "'");
  }
}

void print_elements(const std::vector<PglMap>& elements, bool force,
                    std::ostream& out) {
  if (elements.size() > 60 && !force) {
    out << "  elements: " << elements.size()
        << " (suppressed; pass --elements to list)\n";
    return;
  }
  out << "  elements:\n";
  for (const PglMap& m : elements) out << "    " << m.str() << "\n";
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const SourceArgs& source, int base_flag, std::size_t cap_flag,
                bool as_json, bool list_elements) {
  auto start = std::chrono::steady_clock::now();
  Configuration c = source.load();
  if (base_flag >= static_cast<int>(c.lines.size())) {
    throw CLI::ValidationError(
        "--base", "line index out of range (configuration has " +
                      std::to_string(c.lines.size()) + " lines)");
  }
  GroupoidAnalysis a = enumerate_generators(c);
  std::vector<std::vector<int>> components = connectivity(a);
  const std::size_t cap = cap_flag ? cap_flag : default_cap(c.field);

  int aux_min = 0, aux_max = 0;
  if (!a.aux_counts.empty()) {
    aux_min = aux_max = a.aux_counts.begin()->second;
    for (const auto& [pair, n] : a.aux_counts) {
      aux_min = std::min(aux_min, n);
      aux_max = std::max(aux_max, n);
    }
  }

  struct ComponentGroup {
    int base;
    GroupResult group;
  };
  std::vector<ComponentGroup> groups;
  for (const auto& comp : components) {
    int base = comp.front();
    if (base_flag >= 0 &&
        std::find(comp.begin(), comp.end(), base_flag) != comp.end()) {
      base = base_flag;
    }
    groups.push_back({base, vertex_group(c, a, base, cap)});
  }

  std::optional<InvarianceReport> invariance;
  if (c.marked) invariance = marked_invariance(c, a);

  auto end = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(end - start).count();

  if (as_json) {
    json out;
    out["command"] = "analyze";
    out["configuration"] = c.name;
    out["field"] = {{"min_poly", [&] {
                       json arr = json::array();
                       for (const Integer& x : c.field.min_poly()) {
                         arr.push_back(static_cast<long long>(x));
                       }
                       return arr;
                     }()}};
    out["lines"] = c.lines.size();
    out["ambient_dim"] = c.ambient_dim();
    out["generators"] = a.generators.size();
    out["aux_counts"] = {{"min", aux_min}, {"max", aux_max}};
    out["components"] = components;
    json vgs = json::array();
    for (const auto& g : groups) {
      json vg;
      vg["base"] = g.base;
      vg["cap"] = g.group.cap;
      vg["infinite"] = g.group.infinite;
      vg["label"] = g.group.label.str();
      if (!g.group.infinite) {
        vg["order"] = g.group.order();
        vg["histogram"] = hist_json(g.group.histogram);
        if (list_elements || g.group.order() <= 60) {
          json els = json::array();
          for (const PglMap& m : g.group.elements) els.push_back(matrix_json(m));
          vg["elements"] = std::move(els);
        }
      }
      vgs.push_back(std::move(vg));
    }
    out["vertex_groups"] = std::move(vgs);
    if (invariance) {
      out["marked_invariance"] = {{"holds", invariance->holds},
                                  {"checked", invariance->checked}};
    }
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "configuration: " << (c.name.empty() ? "(unnamed)" : c.name)
            << "\n";
  std::cout << "field: " << field_str(c.field) << "\n";
  std::cout << "lines: " << c.lines.size() << " in P^" << c.ambient_dim()
            << "\n";
  std::cout << "simple morphisms: " << a.generators.size() << "\n";
  if (!a.aux_counts.empty()) {
    std::cout << "auxiliaries per ordered pair: min " << aux_min << ", max "
              << aux_max << "\n";
  }
  std::cout << "components: " << components.size() << "\n";
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& g = groups[i];
    std::cout << "  component " << i << " (" << components[i].size()
              << " lines), vertex group at base " << g.base << ": ";
    if (g.group.infinite) {
      std::cout << "Infinite (closure exceeded cap " << g.group.cap << ")\n";
    } else {
      std::cout << "order " << g.group.order() << ", label "
                << label_str(g.group.label) << "\n";
      std::cout << "    element-order histogram: "
                << hist_str(g.group.histogram) << "\n";
      if (list_elements) print_elements(g.group.elements, true, std::cout);
    }
  }
  if (invariance) {
    std::cout << "marked invariance: "
              << (invariance->holds ? "holds" : "VIOLATED") << " ("
              << invariance->checked << " morphisms checked)\n";
    if (!invariance->holds && invariance->counterexample) {
      std::cout << "  counterexample: morphism ("
                << invariance->counterexample->src << ","
                << invariance->counterexample->aux << ","
                << invariance->counterexample->dst << ") at point "
                << invariance->offending_point->str() << "\n";
    }
  }
  std::cout << "elapsed: " << ms << " ms\n";
  return kExitOk;
}

// ---------------------------------------------------------------- orbit

int cmd_orbit(const SourceArgs& source, int line, const std::string& point,
              std::size_t cap_flag, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Configuration c = source.load();
  GroupoidAnalysis a = enumerate_generators(c);
  ProjPoint p = parse_point_arg(c.field, point);
  OrbitResult res =
      orbit(c, a, line, p, cap_flag ? cap_flag : kDefaultOrbitCap);
  auto end = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(end - start).count();

  std::map<int, std::vector<const ProjPoint*>> by_line;
  for (const auto& [li, pt] : res.members) by_line[li].push_back(&pt);

  if (as_json) {
    json out;
    out["command"] = "orbit";
    out["configuration"] = c.name;
    out["line"] = line;
    out["point"] = point_json(p);
    out["count"] = res.members.size();
    out["truncated"] = res.truncated;
    json groups = json::array();
    for (const auto& [li, pts] : by_line) {
      json row;
      row["line"] = li;
      json arr = json::array();
      for (const ProjPoint* q : pts) arr.push_back(point_json(*q));
      row["points"] = std::move(arr);
      groups.push_back(std::move(row));
    }
    out["members_by_line"] = std::move(groups);
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "orbit of (line " << line << ", " << p.str() << ") in "
            << (c.name.empty() ? "(unnamed)" : c.name) << ": "
            << res.members.size() << " members"
            << (res.truncated ? " (TRUNCATED at cap)" : "") << "\n";
  for (const auto& [li, pts] : by_line) {
    std::cout << "  line " << li << " (" << pts.size() << "):";
    for (const ProjPoint* q : pts) std::cout << " " << q->str();
    std::cout << "\n";
  }
  std::cout << "elapsed: " << ms << " ms\n";
  return kExitOk;
}

// ---------------------------------------------------------------- stabilizer

int cmd_stabilizer(const std::string& named_set, const std::string& field_arg,
                   const std::string& points_arg, bool as_json,
                   bool list_elements) {
  std::vector<ProjPoint> points;
  if (!named_set.empty()) {
    PenroseParameterSets sets = penrose_parameter_sets();
    if (named_set == "X") points = sets.x;
    else if (named_set == "Y") points = sets.y;
    else if (named_set == "Xtilde") points = sets.x_tilde;
    else if (named_set == "Ytilde") points = sets.y_tilde;
    else if (named_set == "E") points = klein_parameter_set();
    else {
      throw CLI::ValidationError(
          "--set", "expected one of X, Y, Xtilde, Ytilde, E");
    }
  } else {
    if (field_arg.empty() || points_arg.empty()) {
      throw CLI::ValidationError(
          "stabilizer", "either --set or both --field and --points required");
    }
    std::vector<long long> coeffs;
    std::stringstream ss(field_arg);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));
    Field f = Field::from_min_poly(coeffs);
    std::string text = points_arg;
    if (!text.empty() && text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw ParseError("cannot open points file");
      std::stringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    json j = json::parse(text);
    if (!j.is_array()) throw ParseError("points must be a JSON array");
    for (const json& pj : j) points.push_back(parse_point_arg(f, pj.dump()));
  }

  auto start = std::chrono::steady_clock::now();
  GroupResult g = stabilizer(points);
  auto end = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(end - start).count();

  if (as_json) {
    json out;
    out["command"] = "stabilizer";
    out["points"] = [&] {
      json arr = json::array();
      for (const ProjPoint& p : points) arr.push_back(point_json(p));
      return arr;
    }();
    out["order"] = g.order();
    out["label"] = g.label.str();
    out["histogram"] = hist_json(g.histogram);
    json els = json::array();
    for (const PglMap& m : g.elements) els.push_back(matrix_json(m));
    out["elements"] = std::move(els);
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "stabilizer of " << points.size() << " points over "
            << field_str(points.front().field()) << ": order " << g.order()
            << ", label " << label_str(g.label) << "\n";
  std::cout << "  element-order histogram: " << hist_str(g.histogram) << "\n";
  print_elements(g.elements, list_elements, std::cout);
  std::cout << "elapsed: " << ms << " ms\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(bool as_json, const std::string& only) {
  VerifyOptions options;
  if (!only.empty()) {
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ',')) options.only.insert(std::stoi(item));
  }
  std::vector<CriterionResult> results = run_acceptance(options);
  int failed = 0;
  for (const CriterionResult& r : results) {
    if (!r.passed) ++failed;
  }
  if (as_json) {
    json out;
    out["command"] = "verify";
    json arr = json::array();
    for (const CriterionResult& r : results) {
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"timing_ms", r.millis}});
    }
    out["criteria"] = std::move(arr);
    out["passed"] = results.size() - static_cast<std::size_t>(failed);
    out["failed"] = failed;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CriterionResult& r : results) {
      std::cout << "[" << (r.id < 10 ? " " : "") << r.id << "/"
                << results.size() << "] " << (r.passed ? "PASS" : "FAIL")
                << "  " << r.title << "  (" << static_cast<long>(r.millis)
                << " ms)\n";
      if (!r.detail.empty()) std::cout << "        " << r.detail << "\n";
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/"
              << results.size() << " criteria passed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groupoids of projective line configurations"};
  app.require_subcommand(1);

  SourceArgs analyze_source, orbit_source;
  int base = -1;
  std::size_t cap = 0;
  bool as_json = false, list_elements = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "components, auxiliary counts and vertex groups");
  analyze_source.attach(analyze);
  analyze->add_option("--base", base, "base line for the vertex group");
  analyze->add_option("--cap", cap, "closure soundness cap override");
  analyze->add_flag("--json", as_json, "structured output");
  analyze->add_flag("--elements", list_elements, "list group elements");

  int orbit_line = 0;
  std::string orbit_point;
  CLI::App* orbit_cmd =
      app.add_subcommand("orbit", "orbit of a P^1 parameter on a line");
  orbit_source.attach(orbit_cmd);
  orbit_cmd->add_option("--line", orbit_line, "start line index")->required();
  orbit_cmd->add_option("--point", orbit_point, "start parameter, e.g. 1,0")
      ->required();
  orbit_cmd->add_option("--cap", cap, "orbit size cap");
  orbit_cmd->add_flag("--json", as_json, "structured output");

  std::string stab_set, stab_field, stab_points;
  CLI::App* stab = app.add_subcommand(
      "stabilizer", "setwise stabilizer of a finite set of P^1 points");
  stab->add_option("--set", stab_set,
                   "named parameter set: X, Y, Xtilde, Ytilde, E");
  stab->add_option("--field", stab_field,
                   "minimal polynomial, low degree first, e.g. 1,1,1");
  stab->add_option("--points", stab_points,
                   "JSON array of P^1 points, or @file");
  stab->add_flag("--json", as_json, "structured output");
  stab->add_flag("--elements", list_elements, "always list group elements");

  std::string verify_only;
  CLI::App* verify =
      app.add_subcommand("verify", "run the built-in verification suite");
  verify->add_flag("--json", as_json, "structured output");
  verify->add_option("--only", verify_only,
                     "comma-separated criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(analyze_source, base, cap, as_json, list_elements);
    }
    if (orbit_cmd->parsed()) {
      return cmd_orbit(orbit_source, orbit_line, orbit_point, cap, as_json);
    }
    if (stab->parsed()) {
      return cmd_stabilizer(stab_set, stab_field, stab_points, as_json,
                            list_elements);
    }
    if (verify->parsed()) {
      return cmd_verify(as_json, verify_only);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitUsage;
}
