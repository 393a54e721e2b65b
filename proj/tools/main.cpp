// Command-line front end: exact invariants of Brieskorn-Pham links,
// plane-curve branch knots, and plumbing boundaries.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brieskorn/alexander.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/pham.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/puiseux.hpp"
#include "report.hpp"

namespace bk = brieskorn;
using bk::cli::ordered_json;
using bk::cli::Report;
using bk::cli::str;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bk::input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::int64_t parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw bk::input_error(std::string("bad ") + what + " '" + s + "'");
  }
}

// "3/2:1" or "2:-1/3" -> one branch term; exponent num/den kept as written.
bk::PuiseuxTerm parse_term(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw bk::input_error("branch term '" + spec + "': expected exponent:coefficient");
  const std::string exp = spec.substr(0, colon);
  const std::string coeff = spec.substr(colon + 1);
  bk::PuiseuxTerm term;
  const auto slash = exp.find('/');
  if (slash == std::string::npos) {
    term.exp_num = parse_int(exp, "exponent");
    term.exp_den = 1;
  } else {
    term.exp_num = parse_int(exp.substr(0, slash), "exponent numerator");
    term.exp_den = parse_int(exp.substr(slash + 1), "exponent denominator");
  }
  try {
    term.coefficient = mpq_class(coeff);
    term.coefficient.canonicalize();
  } catch (const std::exception&) {
    throw bk::input_error("branch term '" + spec + "': bad coefficient");
  }
  return term;
}

bk::PuiseuxBranch parse_terms_option(const std::string& text) {
  std::vector<bk::PuiseuxTerm> terms;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) terms.push_back(parse_term(item));
  return bk::PuiseuxBranch(std::move(terms));
}

// File of "exp_num exp_den coeff_num coeff_den" quadruples.
bk::PuiseuxBranch parse_branch_file(const std::string& text) {
  std::vector<bk::PuiseuxTerm> terms;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::int64_t en, ed, cn, cd;
    if (!(ls >> en)) continue;
    if (!(ls >> ed >> cn >> cd))
      throw bk::input_error("branch file: expected four integers per line");
    std::string extra;
    if (ls >> extra) throw bk::input_error("branch file: trailing tokens");
    if (cd == 0) throw bk::input_error("branch file: zero coefficient denominator");
    bk::PuiseuxTerm t;
    t.exp_num = en;
    t.exp_den = ed;
    t.coefficient = mpq_class(mpz_class(static_cast<long>(cn)),
                              mpz_class(static_cast<long>(cd)));
    t.coefficient.canonicalize();
    terms.push_back(t);
  }
  return bk::PuiseuxBranch(std::move(terms));
}

ordered_json spectrum_json(const bk::MonodromySpectrum& spec, Report& report) {
  ordered_json out;
  out["total"] = str(spec.total);
  out["distinct"] = spec.entries.size();
  if (spec.entries.size() <= 64) {
    ordered_json entries = ordered_json::array();
    for (const auto& [rot, mult] : spec.entries)
      entries.push_back(ordered_json::array({rot.to_string(), str(mult)}));
    out["entries"] = std::move(entries);
  } else {
    report.note("spectrum entries suppressed (more than 64 distinct rotation numbers)");
  }
  return out;
}

ordered_json factorization_json(const bk::CyclotomicFactorization& fact) {
  ordered_json out = ordered_json::array();
  for (const auto& [d, m] : fact.multiplicity)
    out.push_back(ordered_json::array({d, str(m)}));
  return out;
}

ordered_json sphere_class_json(const bk::SphereClass& sc) {
  ordered_json out;
  out["kind"] = bk::SphereClass::kind_name(sc.kind);
  if (sc.bp_multiple) out["bp_multiple"] = str(*sc.bp_multiple);
  if (sc.bp_mod28) out["bp_mod_28"] = *sc.bp_mod28;
  if (sc.arf_residue) out["delta_minus_one_mod_8"] = *sc.arf_residue;
  out["decided_by"] = sc.detail;
  return out;
}

void run_link(const std::vector<std::int64_t>& raw, const bk::EnumerationOptions& opts,
              Report& report) {
  const bk::Exponents a(raw);
  report.request()["exponents"] = raw;
  ordered_json& res = report.results();

  res["n"] = a.n();
  res["link_dimension"] = a.link_dimension();
  res["milnor_number"] = str(bk::milnor_number(a));
  res["lcm"] = str(a.lcm());
  res["connectivity"] = bk::link_connectivity(a);
  report.note("milnor_number: product of (a_i - 1)");
  report.note("spectrum: fractional weight sums over the exponent lattice");

  const bk::MonodromySpectrum spec = bk::monodromy_spectrum(a, opts);
  res["spectrum"] = spectrum_json(spec, report);
  const bk::CyclotomicFactorization fact = bk::factorization_from_spectrum(spec);
  res["cyclotomic_factorization"] = factorization_json(fact);

  constexpr std::size_t kDenseLimit = 256;
  if (fact.degree() <= static_cast<long>(kDenseLimit)) {
    res["characteristic_polynomial"] = bk::cli::polynomial_json(fact.expand(1u << 16));
  } else {
    res["characteristic_polynomial"] = {{"degree", str(fact.degree())},
                                        {"coefficients_omitted", "degree above the rendering limit"}};
  }
  try {
    res["delta_at_one"] = str(fact.value_at_one());
    res["delta_at_minus_one"] = str(fact.value_at_minus_one());
  } catch (const bk::budget_error&) {
    report.note("delta evaluations omitted: values too large to print");
  }

  if (a.n() >= 3) {
    res["homotopy_sphere"] = bk::is_homotopy_sphere(a);
    report.note("homotopy_sphere: gcd-graph criterion (two isolated vertices, or one "
                "plus an odd all-gcd-2 component)");
  } else {
    report.note("homotopy_sphere: criterion needs n >= 3, skipped");
  }

  if (a.n() >= 2 && a.n() % 2 == 0) {
    const bk::SignatureParts parts = bk::signature_parts(a, opts);
    res["signature"] = {{"value", str(parts.value())},
                        {"positive", str(parts.positive)},
                        {"negative", str(parts.negative)},
                        {"zero", str(parts.zero)}};
    report.note("signature: weight sums mod 2 in (0,1) count +1, in (1,2) count -1");
  }

  if (a.n() >= 3) res["sphere_class"] = sphere_class_json(bk::sphere_class(a, opts));

  if (a.count() == 3) {
    const bool hs3 = bk::is_homology_3_sphere(a);
    res["homology_3_sphere"] = hs3;
    const bk::GeometryType geo = bk::geometry_type(a);
    res["geometry"] = {{"kind", bk::GeometryType::kind_name(geo.kind)},
                       {"reciprocal_sum", str(geo.reciprocal_sum)}};
    report.note("geometry: reciprocal exponent sum versus 1");
    if (hs3) {
      res["casson_invariant"] = str(bk::casson_invariant(a, opts));
      report.note("casson_invariant: signature / 8");
    }
  }
}

void run_table(const std::string& family, std::int64_t from, std::int64_t to,
               const bk::EnumerationOptions& opts, Report& report) {
  report.request()["family"] = family;
  ordered_json rows = ordered_json::array();
  if (family == "bp8") {
    if (from < 0) from = 1;
    if (to < 0) to = 28;
    if (from < 1 || to < from) throw bk::input_error("table bp8: need 1 <= from <= to");
    report.request()["from"] = from;
    report.request()["to"] = to;
    for (std::int64_t k = from; k <= to; ++k) {
      const bk::Exponents a({6 * k - 1, 3, 2, 2, 2});
      const mpz_class sig = bk::signature(a, opts);
      const bk::SphereClass sc = bk::sphere_class(a, opts);
      ordered_json row;
      row["k"] = k;
      row["exponents"] = a.values();
      row["signature"] = str(sig);
      row["bp_multiple"] = str(*sc.bp_multiple);
      row["class_mod_28"] = *sc.bp_mod28;
      rows.push_back(std::move(row));
    }
    report.note("bp8: boundaries of the 8k-signature parallelizable pieces; class is "
                "the generator multiple mod 28");
  } else if (family == "kervaire") {
    if (from < 0) from = 3;
    if (to < 0) to = 17;
    if (from < 3 || from % 2 == 0 || to < from)
      throw bk::input_error("table kervaire: need odd from >= 3 and to >= from");
    report.request()["from"] = from;
    report.request()["to"] = to;
    for (std::int64_t d = from; d <= to; d += 2) {
      const bk::Exponents a({d, 2, 2, 2});
      const bk::SphereClass sc = bk::sphere_class(a, opts);
      const bk::CyclotomicFactorization fact = bk::characteristic_factorization(a, opts);
      ordered_json row;
      row["d"] = d;
      row["d_mod_8"] = d % 8;
      row["exponents"] = a.values();
      row["delta_at_minus_one"] = str(fact.value_at_minus_one());
      row["class"] = bk::SphereClass::kind_name(sc.kind);
      rows.push_back(std::move(row));
    }
    report.note("kervaire: class alternates standard/Kervaire with d mod 8 = +-1 / +-3");
  } else {
    throw bk::input_error("unknown family '" + family + "' (expected bp8 or kervaire)");
  }
  report.results()["rows"] = std::move(rows);
}

void run_curve(const std::string& terms_opt, const std::string& branch_file,
               const std::string& meet_expr, const std::string& meet_file,
               Report& report) {
  if (terms_opt.empty() == branch_file.empty())
    throw bk::input_error("curve: give exactly one of --terms or --branch-file");
  const bk::PuiseuxBranch branch = terms_opt.empty()
                                       ? parse_branch_file(read_file(branch_file))
                                       : parse_terms_option(terms_opt);
  ordered_json echo = ordered_json::array();
  for (const bk::PuiseuxTerm& t : branch.terms())
    echo.push_back(ordered_json::array(
        {t.exp_num, t.exp_den, str(t.coefficient)}));
  report.request()["terms"] = std::move(echo);

  ordered_json& res = report.results();
  res["ramification"] = branch.ramification();

  const bk::CharacteristicPairs cp = bk::characteristic_pairs(branch);
  ordered_json pairs = ordered_json::array();
  for (const bk::CharacteristicPair& pq : cp.pairs())
    pairs.push_back(ordered_json::array({pq.p, pq.q}));
  res["characteristic_pairs"] = std::move(pairs);
  report.note("characteristic_pairs: gcd-drop rule on exponent numerators over the "
              "common denominator");

  const bk::CablePresentation cable = bk::cable_presentation(cp);
  ordered_json stages = ordered_json::array();
  for (const bk::CableStage& st : cable.stages)
    stages.push_back(ordered_json::array({st.winding, st.slope}));
  res["cable"] = {{"unknot", cable.is_unknot()}, {"stages", std::move(stages)}};
  report.note("cable: slopes in the Seifert framing of the previous stage (value "
              "semigroup generators)");

  const mpz_class mu = bk::branch_milnor_number(cp);
  res["milnor_number"] = str(mu);
  res["genus"] = str(mpz_class(mu / 2));
  res["alexander_polynomial"] = bk::cli::polynomial_json(bk::alexander_for_pairs(cp));

  if (!meet_expr.empty() || !meet_file.empty()) {
    if (!meet_expr.empty() && !meet_file.empty())
      throw bk::input_error("curve: give at most one of --meet and --meet-file");
    const bk::BivariatePolynomial f =
        meet_expr.empty() ? bk::BivariatePolynomial::parse_term_list(read_file(meet_file))
                          : bk::BivariatePolynomial::parse_expression(meet_expr);
    report.request()["meet"] = f.to_string();
    res["intersection_multiplicity"] = str(bk::intersection_multiplicity(branch, f));
    report.note("intersection_multiplicity: order in t of the polynomial along the "
                "parameterized branch; equals the linking number of the two knots");
  }
}

void run_plumb(const std::string& graph_name, const std::string& graph_file,
               Report& report) {
  if (graph_name.empty() == graph_file.empty())
    throw bk::input_error("plumb: give exactly one of a named graph or --graph-file");
  const bk::PlumbingGraph g = graph_name.empty()
                                  ? bk::PlumbingGraph::parse(read_file(graph_file))
                                  : bk::PlumbingGraph::named(graph_name);
  if (!graph_name.empty()) report.request()["graph"] = graph_name;
  if (!graph_file.empty()) report.request()["graph_file"] = graph_file;

  ordered_json& res = report.results();
  res["vertices"] = g.vertices().size();
  res["edges"] = g.edges().size();

  const bk::IntersectionMatrix m = bk::intersection_matrix(g);
  ordered_json matrix = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(str(m.at(i, j)));
    matrix.push_back(std::move(row));
  }
  res["intersection_matrix"] = std::move(matrix);
  res["determinant"] = str(bk::determinant(m));
  const bool neg = bk::is_negative_definite(m);
  res["negative_definite"] = neg;
  if (!neg)
    report.note("intersection form is not negative definite; resolution graphs "
                "always are");
  res["signature"] = bk::matrix_signature(m);

  const bk::SmithForm h = bk::boundary_homology(g);
  ordered_json factors = ordered_json::array();
  for (const mpz_class& d : h.invariant_factors) factors.push_back(str(d));
  ordered_json coker = ordered_json::array();
  for (const mpz_class& d : h.cokernel) coker.push_back(str(d));
  res["smith_form"] = {{"invariant_factors", std::move(factors)},
                       {"rank", h.rank},
                       {"free_rank", h.free_rank},
                       {"cokernel", std::move(coker)}};
  res["homology_sphere"] = h.is_trivial_cokernel();
  res["euler_characteristic"] = bk::euler_characteristic_boundary(g);
  report.note("first homology of the boundary: cokernel of the intersection matrix "
              "(Smith normal form)");
  report.note("euler characteristic of the boundary vanishes, as asserted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact topological invariants of links of isolated hypersurface "
               "singularities"};
  app.require_subcommand(1);

  const bk::EnumerationOptions defaults = bk::EnumerationOptions::from_environment();
  std::uint64_t budget = defaults.budget;
  unsigned workers = defaults.workers;
  bool json_out = false;
  bool plain_out = false;
  app.add_flag("--json", json_out, "emit one JSON document");
  app.add_flag("--plain", plain_out, "emit key: value lines (default)");
  app.add_option("--budget", budget, "enumeration budget (tuples / residue-table length)");
  app.add_option("--workers", workers, "parallel workers for direct enumeration");

  auto* link = app.add_subcommand("link", "invariants of a pure-power link from its exponents");
  std::vector<std::int64_t> exponents;
  link->add_option("exponents", exponents, "integers >= 2")->required()->expected(-1);
  link->fallthrough();

  auto* table = app.add_subcommand("table", "invariant tables for the built-in families");
  std::string family;
  std::int64_t from = -1, to = -1;
  table->add_option("family", family, "bp8 | kervaire")->required();
  table->add_option("--from", from, "first index");
  table->add_option("--to", to, "last index");
  table->fallthrough();

  auto* curve = app.add_subcommand("curve", "plane-curve branch: pairs, cable, Alexander polynomial");
  std::string terms, branch_file, meet_expr, meet_file;
  curve->add_option("--terms", terms, "exp:coeff[,exp:coeff...], e.g. 3/2:1,7/4:1");
  curve->add_option("--branch-file", branch_file, "file of 'en ed cn cd' quadruples");
  curve->add_option("--meet", meet_expr, "second curve as a polynomial in x and y");
  curve->add_option("--meet-file", meet_file, "second curve as 'coeff dx dy' lines");
  curve->fallthrough();

  auto* plumb = app.add_subcommand("plumb", "plumbing graph: matrix, Smith form, boundary homology");
  std::string graph_name, graph_file;
  plumb->add_option("graph", graph_name, "named graph: E8 or A<k>");
  plumb->add_option("--graph-file", graph_file, "graph description file");
  plumb->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bk::EnumerationOptions opts;
  opts.budget = budget;
  opts.workers = workers;

  try {
    Report report(app.get_subcommands().front()->get_name());
    if (link->parsed())
      run_link(exponents, opts, report);
    else if (table->parsed())
      run_table(family, from, to, opts, report);
    else if (curve->parsed())
      run_curve(terms, branch_file, meet_expr, meet_file, report);
    else
      run_plumb(graph_name, graph_file, report);
    std::cout << (json_out && !plain_out ? report.to_json() : report.to_plain());
    return 0;
  } catch (const bk::budget_error& e) {
    std::cerr << "error (budget): " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error (internal): " << e.what() << "\n";
    return 1;
  }
}
