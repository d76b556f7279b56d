#include <omp.h>

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "polymap/curves.hpp"
#include "polymap/errors.hpp"
#include "polymap/maps.hpp"
#include "polymap/parser.hpp"
#include "polymap/polyalg.hpp"
#include "polymap/refgroups.hpp"
#include "report.hpp"

namespace polymap::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json_out = false;
  bool timing = false;
  double budget = 0;  // 0 = environment/default
  std::uint64_t seed = DegreeOptions{}.seed;

  Budget make_budget() const { return budget > 0 ? Budget::scaled(budget) : Budget::from_environment(); }
};

// Polynomials and a map over one common field.
std::pair<PolyMap, MultiPoly> unify(const PolyMap& f, const MultiPoly& p) {
  unsigned n = std::lcm(f.ring()->conductor(), p.ring().conductor());
  PolyMap g = f.with_conductor(n);
  return {g, p.in_ring(g.ring())};
}

CycloNumber parse_constant(const std::string& text) {
  MultiPoly p = parse_poly(text, {"x", "y"});
  if (!p.is_constant()) throw DomainError("'" + text + "' is not a constant");
  return p.constant_term();
}

// ---------------------------------------------------------------- proper etc.

void cmd_proper(RunReport& r, const std::string& map_text, const Globals& g) {
  PolyMap f = parse_map(map_text);
  r.result["map"] = format_map(f);
  try {
    bool p = is_proper(f, g.make_budget());
    r.result["proper"] = p;
    r.lines.push_back(p ? "proper" : "not proper");
    r.add("properness decided", true, p ? "proper" : "not proper");
  } catch (const ResourceExceeded& e) {
    r.result["proper"] = nullptr;
    r.lines.push_back("undecided (budget exceeded)");
    r.skip("properness decided", e.what());
  }
}

void cmd_degree(RunReport& r, const std::string& map_text, const Globals& g) {
  PolyMap f = parse_map(map_text);
  DegreeOptions opt;
  opt.seed = g.seed;
  opt.budget = g.make_budget();
  r.result["map"] = format_map(f);
  r.result["seed"] = g.seed;
  try {
    std::size_t d = topological_degree(f, opt);
    r.result["degree"] = d;
    r.lines.push_back("degree " + std::to_string(d));
    r.add("degree computed", true, std::to_string(d));
  } catch (const ResourceExceeded& e) {
    r.result["degree"] = nullptr;
    r.lines.push_back("degree undecided (budget exceeded)");
    r.skip("degree computed", e.what());
  }
}

void cmd_branch(RunReport& r, const std::string& map_text, const std::string& claimed_text, const std::string& tier,
                const Globals& g) {
  PolyMap f = parse_map(map_text);
  r.result["map"] = format_map(f);
  if (claimed_text.empty()) {
    try {
      json gens = json::array();
      for (const auto& p : branch_ideal(f, g.make_budget())) {
        gens.push_back(poly_to_json(p));
        r.lines.push_back(format_poly(p) + " = 0");
      }
      r.result["generators"] = gens;
      r.add("branch locus computed", true, std::to_string(gens.size()) + " generator(s)");
    } catch (const ResourceExceeded& e) {
      r.skip("branch locus computed", e.what());
    }
    return;
  }
  r.tier = tier;
  auto [fu, claimed] = unify(f, parse_poly(claimed_text, {"x", "y"}));
  BranchReport rep = verify_branch(fu, claimed, tier == "full", g.make_budget());
  r.result["claimed"] = format_poly(claimed);
  if (rep.computed) r.result["computed"] = format_poly(*rep.computed);
  r.result["detail"] = rep.detail;
  auto put = [&](const std::string& name, TierStatus s) {
    if (s == TierStatus::NotRun) return;
    r.checks.push_back({name, to_string(s), s == TierStatus::Fail ? rep.detail : std::string()});
  };
  put("divisibility", rep.divisibility);
  put("squarefree", rep.squarefree);
  put("elimination", rep.elimination);
  if (rep.computed) r.lines.push_back("computed branch: " + format_poly(*rep.computed) + " = 0");
}

void cmd_milnor(RunReport& r, const std::string& poly_text, const std::string& at, const Globals& g) {
  MultiPoly f = parse_poly(poly_text, {"x", "y"});
  r.result["poly"] = format_poly(f);
  if (!at.empty()) {
    auto comma = at.find(',');
    if (comma == std::string::npos) throw DomainError("--at expects 'a,b'");
    CycloNumber a = parse_constant(at.substr(0, comma)), b = parse_constant(at.substr(comma + 1));
    f = translate_to_origin(f, a, b);
    r.result["at"] = {format_cyclo(a), format_cyclo(b)};
    r.result["translated"] = format_poly(f);
  }
  try {
    MilnorResult m = milnor_at_origin(f, g.make_budget());
    r.result["milnor"] = m.value ? json(*m.value) : json("infinite");
    r.result["isolated"] = m.isolated;
    r.lines.push_back("milnor number " + format_dimension(m.value));
    r.add("milnor number computed", true, format_dimension(m.value));
  } catch (const ResourceExceeded& e) {
    r.skip("milnor number computed", e.what());
  }
}

void cmd_distinguish(RunReport& r, const std::string& a, const std::string& b, const Globals& g) {
  PolyMap f1 = parse_map(a), f2 = parse_map(b);
  r.result["maps"] = {format_map(f1), format_map(f2)};
  auto cert = distinguish_by_milnor(f1, f2, g.make_budget());
  r.result["distinguished"] = cert.has_value();
  if (cert) {
    r.result["certificate"] = {{"critical", {cert->critical_f, cert->critical_g}},
                               {"milnor", {cert->mu_f, cert->mu_g}},
                               {"reason", cert->reason}};
    r.lines.push_back("not equivalent: milnor " + std::to_string(cert->mu_f) + " vs " + std::to_string(cert->mu_g));
  } else {
    r.lines.push_back("inconclusive: equal milnor numbers");
  }
  r.add("preconditions hold", true);
}

// "d=3,n=2"
std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("--params expects key=value pairs, got '" + item + "'");
    std::string key = item.substr(0, eq);
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    try {
      out[key] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("--params value for '" + key + "' is not an integer");
    }
  }
  return out;
}

void cmd_family(RunReport& r, const std::string& name, const std::string& params, const std::string& q) {
  FamilyParams p;
  for (const auto& [k, v] : parse_params(params)) {
    if (k == "d") {
      p.d = v;
    } else if (k == "n") {
      p.n = v;
    } else {
      throw DomainError("unknown family parameter '" + k + "'");
    }
  }
  if (!q.empty()) p.q = parse_poly(q, {"x", "y"});
  PolyMap f = make_family(parse_family(name), p);
  r.result["family"] = name;
  r.result["map"] = format_map(f);
  r.result["components"] = {poly_to_json(f.f1()), poly_to_json(f.f2())};
  r.lines.push_back(format_map(f));
}

// ---------------------------------------------------------------- groups

json matrix_json(const Matrix2& m) {
  json j = json::array();
  for (const auto& c : m.a) j.push_back(format_cyclo(c));
  return j;
}

void group_structure_checks(RunReport& r, const GroupRecord& g, const GroupElements& els, const Fingerprint& fp) {
  const std::string n = g.spec.name();
  r.add(n + ": order", els.size() == g.expected_order,
        std::to_string(els.size()) + " elements, expected " + std::to_string(g.expected_order));
  if (g.spec.kind == GroupSpec::Kind::Exceptional) {
    r.add(n + ": presentation", verify_presentation(g));
    r.add(n + ": center", fp.center_order == static_cast<std::size_t>(g.k),
          "center " + std::to_string(fp.center_order) + ", k = " + std::to_string(g.k));
    r.add(n + ": 2k < |G|", 2 * static_cast<std::size_t>(g.k) < fp.order);
  }
}

void cmd_group(RunReport& r, const std::string& spec_text, bool want_fp, bool want_inv, bool want_quot,
               bool want_verify) {
  GroupSpec spec = GroupSpec::parse(spec_text);
  GroupRecord g = build_group(spec);
  r.result["group"] = spec.name();
  r.result["expected_order"] = g.expected_order;
  r.result["degrees"] = g.degrees;
  r.result["conductor"] = g.conductor;
  json gens = json::array();
  for (const auto& m : g.generators) gens.push_back(matrix_json(m));
  r.result["generators"] = gens;
  if (spec.kind == GroupSpec::Kind::Exceptional) {
    r.result["presentation"] = {{"k1", g.k1}, {"k2", g.k2}, {"k3", g.k3}, {"k", g.k}, {"st_exponent", g.st_exponent}};
    r.result["label"] = g.label;
  }
  r.lines.push_back(spec.name() + ": order " + std::to_string(g.expected_order) + ", degrees " +
                    std::to_string(g.degrees[0]) + ", " + std::to_string(g.degrees[1]));
  const bool any = want_fp || want_inv || want_quot || want_verify;
  if (want_fp || want_verify || !any) {
    GroupElements els = enumerate(g);
    Fingerprint fp = fingerprint(g, els);
    json hist = json::object();
    for (const auto& [o, c] : fp.order_histogram) hist[std::to_string(o)] = c;
    r.result["fingerprint"] = {{"order", fp.order}, {"center_order", fp.center_order}, {"order_histogram", hist}};
    r.lines.push_back("enumerated " + std::to_string(fp.order) + " elements, center of order " +
                      std::to_string(fp.center_order));
    if (want_verify) group_structure_checks(r, g, els, fp);
  }
  if (want_inv || want_quot || want_verify) {
    auto [p1, p2] = basic_invariants(g);
    r.result["invariants"] = {format_poly(p1), format_poly(p2)};
    r.lines.push_back("phi1 = " + format_poly(p1));
    r.lines.push_back("phi2 = " + format_poly(p2));
    if (want_quot) {
      PolyMap q(p1, p2);
      r.result["quotient_map"] = format_map(q);
      r.lines.push_back("quotient map " + format_map(q));
    }
    if (want_verify) {
      r.add(spec.name() + ": invariants", is_invariant(g, p1) && is_invariant(g, p2));
      r.add(spec.name() + ": deg(phi1)*deg(phi2) = |G|",
            static_cast<std::size_t>(p1.total_degree()) * p2.total_degree() == g.expected_order);
    }
  }
}

void cmd_classes(RunReport& r, int d, bool enumerate_all) {
  std::vector<GroupSpec> specs = classes_of_degree(d);
  json list = json::array();
  for (const auto& s : specs) {
    GroupRecord g = build_group(s);
    list.push_back({{"group", s.name()}, {"order", g.expected_order}});
    r.lines.push_back(s.name());
    if (enumerate_all) {
      std::size_t n = enumerate(g).size();
      r.add(s.name() + ": order", n == static_cast<std::size_t>(d), std::to_string(n) + " elements");
    }
  }
  r.result["degree"] = d;
  r.result["classes"] = list;
}

// ---------------------------------------------------------------- table 4

struct RowOutcome {
  json row;
  std::vector<Check> checks;
};

RowOutcome verify_row(const Table4Row& row, bool full, const Budget& budget) {
  RowOutcome out;
  GroupRecord g = build_group(row.group);
  const std::size_t deg_product =
      static_cast<std::size_t>(row.map.f1().total_degree()) * row.map.f2().total_degree();
  out.checks.push_back({row.id + ": deg(phi1)*deg(phi2) = |G|", deg_product == g.expected_order ? "pass" : "fail",
                        std::to_string(deg_product) + " vs " + std::to_string(g.expected_order)});
  BranchReport rep = verify_branch(row.map, row.claimed, full, budget);
  auto put = [&](const std::string& tier, TierStatus s) {
    if (s == TierStatus::NotRun) return;
    out.checks.push_back({row.id + ": " + tier, to_string(s), s == TierStatus::Fail ? rep.detail : std::string()});
  };
  put("divisibility", rep.divisibility);
  put("squarefree", rep.squarefree);
  put("elimination", rep.elimination);
  out.row = {{"id", row.id},
             {"group", row.group.name()},
             {"map", format_map(row.map)},
             {"claimed", format_poly(row.claimed)},
             {"elimination_mandatory", row.elimination_mandatory},
             {"divisibility", to_string(rep.divisibility)},
             {"squarefree", to_string(rep.squarefree)},
             {"elimination", to_string(rep.elimination)}};
  if (rep.computed) out.row["computed"] = format_poly(*rep.computed);
  return out;
}

void cmd_table4(RunReport& r, const std::string& tier, const Globals& g) {
  if (tier != "full" && tier != "divisibility") throw DomainError("--tier must be 'full' or 'divisibility'");
  r.tier = tier;
  const std::vector<Table4Row> rows = table4_catalog();
  const Budget budget = g.make_budget();
  // rows beyond the mandated subset get a tenth of the budget
  const Budget optional_budget = g.budget > 0 ? Budget::scaled(g.budget / 10) : Budget::scaled(0.1);
  std::vector<RowOutcome> outcomes(rows.size());
  std::vector<std::string> errors(rows.size());
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    try {
      outcomes[i] = verify_row(row, tier == "full", row.elimination_mandatory ? budget : optional_budget);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  json list = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!errors[i].empty()) {
      r.add(rows[i].id + ": computation", false, errors[i]);
      list.push_back({{"id", rows[i].id}, {"error", errors[i]}});
      continue;
    }
    bool ok = true;
    for (auto& c : outcomes[i].checks) {
      ok = ok && c.status != "fail";
      r.checks.push_back(std::move(c));
    }
    passed += ok ? 1 : 0;
    list.push_back(outcomes[i].row);
    std::string line = rows[i].id + ": " + (ok ? "pass" : "FAIL") + "  " + format_poly(rows[i].claimed);
    if (outcomes[i].row.contains("computed") && !ok) line += "  (computed " + outcomes[i].row["computed"].get<std::string>() + ")";
    r.lines.push_back(line);
  }
  r.result["rows"] = list;
  r.lines.push_back(std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows pass");
}

// ---------------------------------------------------------------- theorems

void cmd_theorem_a(RunReport& r, int d_min, int d_max, const Globals& g) {
  if (d_min < 3 || d_max < d_min) throw DomainError("verify-theorem-a needs 3 <= d-min <= d-max");
  const Budget budget = g.make_budget();
  json per_d = json::array();
  for (int d = d_min; d <= d_max; ++d) {
    const std::string D = std::to_string(d), tag = "d=" + D;
    PolyMap f = make_family(Family::Fd, {d, 0, std::nullopt});
    const RingRef& ring = f.ring();
    MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
    MultiPoly h2 = parse_poly("(2-" + D + ")*x*y + x - (" + D + "-1)*y", ring);
    MultiPoly j = f.jacobian();
    r.add(tag + ": J = x^(d-2) * H2", j == x.pow(static_cast<unsigned>(d - 2)) * h2, format_poly(j));
    auto split = jacobian_power_factorization(f, d);
    bool split_ok = split && associates(split->h1, x) && associates(split->h2, h2) &&
                    split->h1.pow(static_cast<unsigned>(d - 2)) * split->h2 == j;
    r.add(tag + ": factorization H1^(d-2) * H2", split_ok,
          split ? format_poly(split->h1) + " | " + format_poly(split->h2) : "no split");
    r.add(tag + ": proper", is_proper(f, budget));
    DegreeOptions opt;
    opt.seed = g.seed;
    opt.budget = budget;
    std::size_t deg = topological_degree(f, opt);
    r.add(tag + ": degree d", deg == static_cast<std::size_t>(d), std::to_string(deg));
    RingRef rx = Ring::make({"X", "s", "t"}, ring->conductor());
    MultiPoly rel_x = parse_poly("X^" + D + " - s*X^" + std::to_string(d - 1) + " + t*X + t", rx);
    r.add(tag + ": integral relation for x", integral_relation_check(f, x, rel_x));
    RingRef ry = Ring::make({"Y", "s", "t"}, ring->conductor());
    MultiPoly rel_y = parse_poly("Y*(s-Y)^" + std::to_string(d - 1) + " - t*(1+Y)^" + std::to_string(d - 1), ry);
    r.add(tag + ": integral relation for y", integral_relation_check(f, y, rel_y));
    CurveClass c2 = classify_low_degree_curve(h2), c1 = classify_low_degree_curve(x);
    r.add(tag + ": V(H2) is a smooth conic with two points at infinity", c2 == CurveClass::ConicTwoPoints,
          to_string(c2));
    r.add(tag + ": V(H1) is a line", c1 == CurveClass::Line, to_string(c1));
    per_d.push_back({{"d", d}, {"map", format_map(f)}, {"jacobian", format_poly(j)}, {"degree", deg}});
    r.lines.push_back("f_" + D + " = " + format_map(f) + ", J = " + format_poly(j));
  }
  // f_2 = Phi2 ∘ (x, y^2) ∘ Phi1 with Phi1 = (x+y, x-y) and Phi2(a,b) = (a + (a^2-b)/4, (a^2-b)/4)
  PolyMap f2 = make_family(Family::Fd, {2, 0, std::nullopt});
  RingRef ring = f2.ring();
  auto P = [&](const char* t) { return parse_poly(t, ring); };
  PlaneAutomorphism phi1(PolyMap(P("x+y"), P("x-y")), PolyMap(P("1/2*(x+y)"), P("1/2*(x-y)")));
  PlaneAutomorphism phi2(PolyMap(P("x + 1/4*(x^2-y)"), P("1/4*(x^2-y)")), PolyMap(P("x-y"), P("(x-y)^2 - 4*y")));
  PolyMap ftilde(P("x"), P("y^2"));
  PolyMap composed = compose(ftilde, phi1, phi2);
  r.add("f_2 = Phi2 o (x, y^2) o Phi1", composed == f2, format_map(composed));
  r.result["cases"] = per_d;
  r.result["remark"] = {{"phi1", format_map(phi1.forward())}, {"phi2", format_map(phi2.forward())},
                        {"composite", format_map(composed)}};
}

void cmd_theorem_b(RunReport& r, int d, int n_max, const Globals& g) {
  if (d < 3 || n_max < 2) throw DomainError("verify-theorem-b needs d >= 3 and n-max >= 2");
  const Budget budget = g.make_budget();
  json mus = json::object();
  for (int n = 2; n <= n_max; ++n) {
    PolyMap f = make_family(Family::Fdn, {d, n, std::nullopt});
    MultiPoly crit = normalize_generator(critical_ideal(f));
    MilnorResult m = milnor_at_origin(crit, budget);
    const std::size_t expect = static_cast<std::size_t>((d - 2) * (n - 1));
    r.add("f_" + std::to_string(d) + "," + std::to_string(n) + ": milnor = (d-2)(n-1)", m.value == expect,
          format_poly(crit) + ": " + format_dimension(m.value));
    mus[std::to_string(n)] = m.value ? json(*m.value) : json("infinite");
  }
  json certs = json::array();
  for (int n = 2; n <= n_max; ++n) {
    for (int m = n + 1; m <= n_max; ++m) {
      auto cert = distinguish_by_milnor(make_family(Family::Fdn, {d, n, std::nullopt}),
                                        make_family(Family::Fdn, {d, m, std::nullopt}), budget);
      const std::string name = "f_" + std::to_string(d) + "," + std::to_string(n) + " vs f_" + std::to_string(d) +
                               "," + std::to_string(m);
      r.add(name + ": distinguished", cert.has_value(),
            cert ? std::to_string(cert->mu_f) + " vs " + std::to_string(cert->mu_g) : "equal");
      if (cert) {
        certs.push_back({{"n", n}, {"m", m}, {"milnor", {cert->mu_f, cert->mu_g}}});
        r.lines.push_back(name + ": not equivalent (milnor " + std::to_string(cert->mu_f) + " vs " +
                          std::to_string(cert->mu_g) + ")");
      }
    }
  }
  r.result["d"] = d;
  r.result["milnor"] = mus;
  r.result["certificates"] = certs;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial self-maps of the plane: properness, degree, branch loci, reflection-group quotients"};
  app.name("polymap");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "JSON report on standard output");
  app.add_flag("--timing", g.timing, "include wall-clock timing in the report");
  app.add_option("--budget", g.budget, "Groebner effort scale factor (default 1, or POLYMAP_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for random sample points");

  std::string map_a, map_b, poly, claimed, at, tier = "full", family, params, q, group_spec;
  bool fp = false, inv = false, quot = false, ver = false, enum_all = false;
  int degree = 0, d = 0, n_max = 0, d_min = 3, d_max = 5;

  auto* proper = app.add_subcommand("proper", "decide whether a map is proper");
  proper->add_option("map", map_a, "map \"(f1, f2)\"")->required();
  auto* deg = app.add_subcommand("degree", "topological degree of a proper map");
  deg->add_option("map", map_a)->required();
  auto* branch = app.add_subcommand("branch", "branch locus, or verify a claimed branch curve");
  branch->add_option("map", map_a)->required();
  branch->add_option("--claimed", claimed, "claimed branch curve in x, y");
  branch->add_option("--tier", tier, "full | divisibility")->check(CLI::IsMember({"full", "divisibility"}));
  auto* milnor = app.add_subcommand("milnor", "Milnor number of a plane curve at a point");
  milnor->add_option("poly", poly)->required();
  milnor->add_option("--at", at, "point a,b (default origin)");
  auto* dist = app.add_subcommand("distinguish", "non-equivalence certificate from Milnor numbers");
  dist->add_option("map1", map_a)->required();
  dist->add_option("map2", map_b)->required();
  auto* fam = app.add_subcommand("family", "construct a named map");
  fam->add_option("name", family, "whitney | fd | fdn | semi_separate | separate")->required();
  fam->add_option("--params", params, "d=..,n=..");
  fam->add_option("--q", q, "Q(x,y) or P(y) for semi_separate / separate");
  auto* grp = app.add_subcommand("group", "reflection group data");
  grp->add_option("spec", group_spec, "cyclic(m), product(m,n), G(m,p,2), G4..G22")->required();
  grp->add_flag("--fingerprint", fp);
  grp->add_flag("--invariants", inv);
  grp->add_flag("--quotient", quot);
  grp->add_flag("--verify", ver);
  auto* cls = app.add_subcommand("classes", "catalog groups of a given order");
  cls->add_option("--degree", degree)->required()->check(CLI::Range(2, 100000));
  cls->add_flag("--enumerate", enum_all, "confirm every order by enumeration");
  auto* t4 = app.add_subcommand("verify-table4", "verify the quotient-map branch curve table");
  t4->add_option("--tier", tier, "full | divisibility")->check(CLI::IsMember({"full", "divisibility"}));
  auto* tha = app.add_subcommand("verify-theorem-a", "the f_d package");
  tha->add_option("--d-min", d_min);
  tha->add_option("--d-max", d_max);
  auto* thb = app.add_subcommand("verify-theorem-b", "Milnor certificates for f_{d,n}");
  thb->add_option("--d", d)->required();
  thb->add_option("--n-max", n_max)->required();

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--budget" || a == "--seed") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown command '" << a << "'\n\n" << app.help();
      return 2;
    }
    break;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  RunReport r;
  r.args = args;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*proper) {
      r.command = "proper";
      cmd_proper(r, map_a, g);
    } else if (*deg) {
      r.command = "degree";
      cmd_degree(r, map_a, g);
    } else if (*branch) {
      r.command = "branch";
      cmd_branch(r, map_a, claimed, tier, g);
    } else if (*milnor) {
      r.command = "milnor";
      cmd_milnor(r, poly, at, g);
    } else if (*dist) {
      r.command = "distinguish";
      cmd_distinguish(r, map_a, map_b, g);
    } else if (*fam) {
      r.command = "family";
      cmd_family(r, family, params, q);
    } else if (*grp) {
      r.command = "group";
      cmd_group(r, group_spec, fp, inv, quot, ver);
    } else if (*cls) {
      r.command = "classes";
      cmd_classes(r, degree, enum_all);
    } else if (*t4) {
      r.command = "verify-table4";
      cmd_table4(r, tier, g);
    } else if (*tha) {
      r.command = "verify-theorem-a";
      cmd_theorem_a(r, d_min, d_max, g);
    } else if (*thb) {
      r.command = "verify-theorem-b";
      cmd_theorem_b(r, d, n_max, g);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g.json_out) {
    write_json(out, r, g.timing);
  } else {
    write_text(out, r, g.timing);
  }
  return r.failed() ? 1 : 0;
}

}  // namespace polymap::cli
