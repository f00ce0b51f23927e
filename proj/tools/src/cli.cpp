#include "harmonium_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "harmonium/enumerate.hpp"
#include "harmonium/error.hpp"
#include "harmonium/fit.hpp"
#include "harmonium/golden.hpp"
#include "harmonium/regions.hpp"
#include "harmonium/serialize.hpp"
#include "harmonium/starfast.hpp"

namespace harmonium::cli {

namespace {

struct ResolvedGraph {
  Graph graph;
  std::string name;
  std::optional<Family> family;
};

ResolvedGraph resolve_graph(const RunConfig& config, std::ostream& err) {
  if (config.file) {
    std::ifstream in(*config.file);
    if (!in) throw DomainError("cannot open edge-list file '" + *config.file + "'");
    std::stringstream text;
    text << in.rdbuf();
    auto parsed = parse_graph(text.str());
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    return {std::move(parsed.graph), *config.file, std::nullopt};
  }
  const Graph g = family(*config.family, *config.n);
  return {g, golden_key(*config.family, *config.n), config.family};
}

bool is_star(const ResolvedGraph& g) { return g.family == Family::star; }

EnumerationOptions enumeration_options(const RunConfig& config) {
  EnumerationOptions opts;
  opts.budget = config.budget;
  opts.workers = config.workers;
  return opts;
}

CountOracle oracle_for(const ResolvedGraph& g, const RunConfig& config) {
  if (is_star(g)) return star_oracle(g.graph.vertex_count());
  auto oracle = brute_force_oracle(g.graph, enumeration_options(config));
  oracle.name = g.name;
  return oracle;
}

FitReport fit_graph(const ResolvedGraph& g, const RunConfig& config) {
  const int n = g.graph.vertex_count();
  // Family members use the standard list; arbitrary graphs use the divisors
  // of the Laplacian minor bound, which always contain the true period.
  const auto candidates =
      g.family ? default_period_candidates(n, config.period_cap) : minor_period_candidates(g.graph, config.period_cap);
  FitOptions options;
  options.workers = config.workers;
  return fit_quasipolynomial(oracle_for(g, config), n, candidates, options);
}

std::string sign_row(const VertexOrientation& eps) { return to_string(eps); }

std::string point_string(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get_str();
  return s + ")";
}

/// Index of the first differing power-series coefficient, or nullopt.
std::optional<std::size_t> first_difference(const RationalGeneratingFunction& a, const RationalGeneratingFunction& b) {
  const std::size_t terms = static_cast<std::size_t>(
      std::max(a.numerator().degree(), b.numerator().degree()) +
      std::max(a.expanded_denominator().degree(), b.expanded_denominator().degree()) + 2);
  const auto sa = a.series(terms);
  const auto sb = b.series(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    if (sa[i] != sb[i]) return i;
  }
  return std::nullopt;
}

void report_mismatch(std::ostream& err, std::string_view what, const RationalGeneratingFunction& fitted,
                     const RationalGeneratingFunction& golden) {
  err << "error: " << what << " differs from the published table";
  if (const auto i = first_difference(fitted, golden)) {
    err << "; first differing coefficient z^" << *i << ": fitted " << to_string(fitted.series(*i + 1)[*i])
        << ", published " << to_string(golden.series(*i + 1)[*i]);
  }
  err << '\n';
}

}  // namespace

MRange parse_m_range(std::string_view text) {
  const auto dots = text.find("..");
  MRange r;
  try {
    if (dots == std::string_view::npos) {
      r.first = r.last = std::stoll(std::string(text));
    } else {
      r.first = std::stoll(std::string(text.substr(0, dots)));
      r.last = std::stoll(std::string(text.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw DomainError("malformed m or m-range '" + std::string(text) + "'");
  }
  if (r.first < 1 || r.last < r.first) throw DomainError("m-range must satisfy 1 <= a <= b");
  return r;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto g = resolve_graph(config, err);
  if (!config.m) throw DomainError("count needs --m");
  const int n = g.graph.vertex_count();
  const auto opts = enumeration_options(config);
  Json rows = Json::array();
  bool ok = true;
  if (config.format == OutputFormat::text) out << "# " << g.name << "\n# m hbar(m)\n";
  for (std::int64_t m = config.m->first; m <= config.m->last; ++m) {
    BigInt value;
    if (is_star(g)) {
      value = count_star(n, m);
      if (power(m, static_cast<unsigned long>(n)) <= config.budget.limit) {
        const BigInt check = count_nowhere_harmonic(g.graph, m, opts);
        if (check != value) {
          err << "error: star count " << value << " disagrees with enumeration " << check << " at m = " << m << '\n';
          ok = false;
        }
      }
    } else {
      value = count_nowhere_harmonic(g.graph, m, opts);
    }
    if (config.format == OutputFormat::text) {
      out << m << ' ' << value << '\n';
    } else {
      Json row;
      row["m"] = m;
      row["hbar"] = value.get_str();
      rows.push_back(std::move(row));
    }
  }
  if (config.format == OutputFormat::json) {
    Json doc;
    doc["graph"] = g.name;
    doc["counts"] = std::move(rows);
    out << doc.dump(2) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto g = resolve_graph(config, err);
  const auto report = fit_graph(g, config);
  const auto unreduced = unreduced_generating_function(report);
  const auto reduced = reduce_gf(unreduced);
  const GoldenEntry* golden = g.family ? find_golden(*g.family, g.graph.vertex_count()) : nullptr;

  bool ok = true;
  if (reduced.warning) err << "warning: reduced denominator is not a product of (1 - z^k) factors\n";
  if (!report.period_minimal_certified) {
    err << "warning: period " << report.quasipolynomial.period()
        << " is the least accepted candidate but not certified minimal\n";
  }
  std::optional<StructureCheck> structure;
  if (report.connected) {
    structure = check_structure(report);
    if (!structure->ok()) {
      err << "error: fit violates the structural invariants (degree n, leading coefficient 1, "
             "(-1)^n hbar(-1) = 2^n - 2)\n";
      ok = false;
    }
  }
  Json golden_json;
  if (golden) {
    golden_json["name"] = golden->name;
    const bool reduced_match = reduced.value == golden->reduced;
    golden_json["reduced_match"] = reduced_match;
    if (!reduced_match) report_mismatch(err, "reduced generating function", reduced.value, golden->reduced);
    ok = ok && reduced_match;
    const auto& factors = unreduced.denominator_factors();
    const bool denominator_match = factors.size() == 1 && factors.front() == golden->unreduced_denominator;
    golden_json["unreduced_denominator_match"] = denominator_match;
    if (!denominator_match) {
      err << "error: unreduced denominator differs from (1 - z^" << golden->unreduced_denominator.k << ")^"
          << golden->unreduced_denominator.exponent << '\n';
    }
    ok = ok && denominator_match;
    if (golden->unreduced) {
      const bool exact = unreduced.numerator() == golden->unreduced->numerator();
      golden_json["unreduced_numerator_match"] = exact;
      if (!exact) report_mismatch(err, "unreduced numerator", unreduced, *golden->unreduced);
      ok = ok && exact;
    }
  }

  if (config.format == OutputFormat::json) {
    Json doc;
    doc["graph"] = g.name;
    doc["fit"] = to_json(report);
    doc["unreduced"] = to_json(unreduced);
    doc["reduced"] = to_json(reduced.value);
    doc["reduced_warning"] = reduced.warning;
    if (structure) {
      Json s;
      s["degree_exact"] = structure->degree_exact;
      s["leading_one"] = structure->leading_one;
      s["value_at_minus_one"] = to_string(structure->value_at_minus_one);
      s["region_count"] = structure->region_count.get_str();
      doc["structure"] = std::move(s);
    }
    doc["golden"] = golden ? golden_json : Json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    const auto& q = report.quasipolynomial;
    out << "graph " << g.name << ": period " << q.period() << ", degree " << q.degree() << ", "
        << report.samples_used << " samples, holdouts verified\n";
    out << "residue  constituent\n";
    for (std::int64_t r = 0; r < q.period(); ++r) {
      out << std::setw(7) << r << "  " << to_string(q.constituent(r)) << '\n';
    }
    if (structure) out << "(-1)^n hbar(-1) = " << structure->value_at_minus_one.get_str() << '\n';
    out << "unreduced: " << to_string(unreduced) << '\n';
    out << "reduced:   " << to_string(reduced.value) << '\n';
    if (golden) {
      out << "published table " << golden->name << ": " << (ok ? "match" : "MISMATCH") << '\n';
    } else {
      out << "no published table for this graph\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_reciprocity(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto g = resolve_graph(config, err);
  if (!g.graph.is_connected()) throw DomainError("reciprocity needs a connected graph");
  const MRange range = config.m.value_or(MRange{1, 5});
  const int n = g.graph.vertex_count();
  const auto opts = enumeration_options(config);
  const bool odd = n % 2 != 0;

  std::optional<FitReport> report;
  std::optional<Polynomial> chi;
  if (config.stanley) {
    chi = chromatic_polynomial(g.graph, opts);
  } else {
    report = fit_graph(g, config);
  }

  bool ok = true;
  Json rows = Json::array();
  if (config.format == OutputFormat::text) {
    out << "# " << g.name << (config.stanley ? "\n# m (-1)^n chi(-m) sum_alpha match\n"
                                             : "\n# m (-1)^n hbar(-m) sum_beta match\n");
  }
  for (std::int64_t m = range.first; m <= range.last; ++m) {
    Rational lhs;
    BigInt rhs;
    if (config.stanley) {
      lhs = (*chi)(-m);
      if (odd) lhs = -lhs;
      rhs = acyclic_reciprocity_rhs(g.graph, m, opts);
    } else {
      lhs = evaluate_negative(*report, m);
      rhs = reciprocity_rhs(g.graph, m, opts);
    }
    const bool match = lhs == Rational(rhs);
    ok = ok && match;
    if (config.format == OutputFormat::text) {
      out << m << ' ' << lhs.get_str() << ' ' << rhs << ' ' << (match ? "yes" : "NO") << '\n';
    } else {
      Json row;
      row["m"] = m;
      row["lhs"] = to_string(lhs);
      row["rhs"] = rhs.get_str();
      row["match"] = match;
      rows.push_back(std::move(row));
    }
  }
  BigInt acyclic;
  if (config.stanley) acyclic = count_acyclic_orientations(g.graph, opts);
  if (config.format == OutputFormat::json) {
    Json doc;
    doc["graph"] = g.name;
    doc["mode"] = config.stanley ? "chromatic" : "nowhere_harmonic";
    doc["rows"] = std::move(rows);
    if (config.stanley) doc["acyclic_orientations"] = acyclic.get_str();
    out << doc.dump(2) << '\n';
  } else if (config.stanley) {
    out << "acyclic orientations: " << acyclic << '\n';
  }
  if (!ok) err << "error: reciprocity mismatch\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_regions(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto g = resolve_graph(config, err);
  if (!g.graph.is_connected()) throw DomainError("regions needs a connected graph");
  const int n = g.graph.vertex_count();
  const bool any = config.count_nonempty || config.orbit_identity || config.verify_vertices;
  const bool count_nonempty = config.count_nonempty || !any;
  if ((config.orbit_identity || config.verify_vertices) && !is_star(g)) {
    throw DomainError("--orbit-identity and --verify-vertices apply to --family star");
  }
  bool ok = true;
  Json doc;
  doc["graph"] = g.name;

  if (count_nonempty) {
    const std::int64_t max_dilation = config.t_max.value_or(4 * n);
    const auto report = count_nonempty_regions(g.graph, max_dilation, config.budget);
    for (const auto& eps : report.unresolved) {
      err << "warning: no interior point found for " << sign_row(eps) << " up to dilation " << max_dilation << '\n';
    }
    if (config.format == OutputFormat::json) {
      doc["nonempty"] = to_json(report);
    } else {
      out << "nonempty regions: " << report.found << " found, " << report.unresolved.size() << " unresolved (expected "
          << power(2, static_cast<unsigned long>(n)) - 2 << ")\n";
      for (const auto& w : report.witnesses) {
        out << "  " << sign_row(w.orientation) << "  witness " << point_string(w.point) << "  t=" << w.dilation << '\n';
      }
    }
  }

  if (config.orbit_identity) {
    const std::int64_t t_max = config.t_max.value_or(8);
    const auto report = star_orbit_identity(n, t_max, config.budget);
    if (config.format == OutputFormat::json) {
      doc["orbit_identity"] = to_json(report);
    } else {
      out << "orbit identity, star n=" << n << "\n# t region_side hbar(t-1) hbar(t)\n";
      for (std::int64_t t = 1; t <= t_max; ++t) {
        out << t << ' ' << report.region_side[t - 1] << ' ' << report.star_counts[t - 1] << ' '
            << report.star_counts[t] << '\n';
      }
      out << "consistent offsets:";
      for (int d : report.consistent_offsets) out << ' ' << d;
      out << '\n';
    }
  }

  if (config.verify_vertices) {
    const auto sys = region_system(g.graph, star_region_orientation(n, 2));
    Json vertices = Json::array();
    if (config.format == OutputFormat::text) out << "listed vertices of P_" << n << "^2\n";
    std::size_t verified = 0;
    for (const auto& p : star_listed_vertices(n)) {
      const auto check = verify_vertex(sys, p);
      const bool good = check.verdict == VertexVerdict::vertex;
      verified += good;
      ok = ok && good;
      if (config.format == OutputFormat::text) {
        out << "  " << point_string(p) << "  " << to_string(check.verdict) << ", active rank " << check.active_rank
            << '\n';
      } else {
        Json v;
        v["point"] = Json::array();
        for (const auto& x : p) v["point"].push_back(to_string(x));
        v["verdict"] = std::string(to_string(check.verdict));
        v["active_rank"] = check.active_rank;
        vertices.push_back(std::move(v));
      }
    }
    if (config.format == OutputFormat::json) {
      doc["vertices"] = std::move(vertices);
    } else {
      out << verified << " of " << n - 1 << " listed vectors verified as vertices\n";
    }
    if (!ok) err << "error: a listed vector is not a vertex\n";
  }

  if (config.format == OutputFormat::json) out << doc.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.file.has_value() == (config.family.has_value() || config.n.has_value())) {
      throw DomainError("give exactly one graph source: --family with --n, or --file");
    }
    if (config.family && !config.n) throw DomainError("--family needs --n");
    if (config.budget.limit == 0) throw DomainError("--budget must be positive");
    if (config.workers == 0) throw DomainError("--workers must be positive");

    std::ofstream file;
    std::ostream* sink = &out;
    if (config.out) {
      file.open(*config.out);
      if (!file) throw DomainError("cannot write '" + *config.out + "'");
      sink = &file;
    }
    switch (config.command) {
      case Command::count: return cmd_count(config, *sink, err);
      case Command::fit: return cmd_fit(config, *sink, err);
      case Command::reciprocity: return cmd_reciprocity(config, *sink, err);
      case Command::regions: return cmd_regions(config, *sink, err);
    }
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const FitError& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.what() == std::string_view("orbit identity violated") ? kCheckFailed : kUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts and analyses nowhere-harmonic colorings of graphs."};
  app.require_subcommand(1);
  RunConfig config;
  std::string family_name, m_text;
  std::uint64_t budget = 0;
  std::int64_t period_cap = 0, t_max = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", family_name, "Graph family")->check(CLI::IsMember({"path", "cycle", "complete", "star"}));
    sub->add_option("--n", config.n, "Number of vertices")->check(CLI::PositiveNumber);
    sub->add_option("--file", config.file, "Edge-list file");
    sub->add_option("--m", m_text, "Palette size m or range a..b");
    sub->add_option("--budget", budget, "Maximum configurations per brute-force call (default $HARMONIUM_BUDGET or 1e9)");
    sub->add_option("--workers", config.workers, "Worker threads");
    sub->add_flag("--json", "Emit JSON");
    sub->add_option("--out", config.out, "Write output to this path");
    sub->add_option("--period-cap", period_cap, "Largest period candidate tried by fits");
    sub->add_option("--t-max", t_max, "Largest dilation for region searches");
  };
  auto* count = app.add_subcommand("count", "Count nowhere-harmonic colorings for each m");
  auto* fit = app.add_subcommand("fit", "Fit the counting quasipolynomial and its generating function");
  auto* reciprocity = app.add_subcommand("reciprocity", "Compare (-1)^n hbar(-m) with the compatible-orientation sum");
  auto* regions = app.add_subcommand("regions", "Region counts, orbit identity and vertex checks");
  for (auto* sub : {count, fit, reciprocity, regions}) add_common(sub);
  reciprocity->add_flag("--stanley", config.stanley, "Chromatic polynomial and acyclic orientations instead");
  regions->add_flag("--count-nonempty", config.count_nonempty, "Find a witness point for each region");
  regions->add_flag("--orbit-identity", config.orbit_identity, "Check the star orbit decomposition");
  regions->add_flag("--verify-vertices", config.verify_vertices, "Verify the listed vertices of P_n^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == count) config.command = Command::count;
  if (chosen == fit) config.command = Command::fit;
  if (chosen == reciprocity) config.command = Command::reciprocity;
  if (chosen == regions) config.command = Command::regions;
  try {
    if (!family_name.empty()) config.family = parse_family(family_name);
    if (!m_text.empty()) config.m = parse_m_range(m_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (chosen->count("--budget")) config.budget.limit = budget;
  if (chosen->count("--period-cap")) config.period_cap = period_cap;
  if (chosen->count("--t-max")) config.t_max = t_max;
  if (chosen->count("--json")) config.format = OutputFormat::json;
  return run(config, out, err);
}

}  // namespace harmonium::cli
