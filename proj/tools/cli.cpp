#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trid/cayley.hpp"
#include "trid/clique.hpp"
#include "trid/identity_io.hpp"
#include "trid/matrix_market.hpp"
#include "trid/spectrum.hpp"
#include "trid/trace_system.hpp"

namespace trid::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string group_spec;
  Index m = 0;
  Caps caps = Caps::from_environment();
  bool unchecked_assoc = false;
  std::string output_dir = ".";
  std::string export_format;
  bool exact = false;
  bool json = false;
  double hist_tol = 1e-6;
  std::string graph_file;
  std::string target;
  std::string mode = "submatrix";
  std::string format = "both";
  std::string output_file;
  std::string identity_file;
};

std::string fmt_value(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9) return std::to_string(static_cast<long long>(r));
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

FiniteGroup load(const RunConfig& cfg) {
  return load_group(cfg.group_spec, TableOptions{cfg.caps.assoc_cap, cfg.unchecked_assoc});
}

std::string stem(const FiniteGroup& g, const RunConfig& cfg) {
  std::string s = g.label();
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s + "_m" + std::to_string(cfg.m);
}

fs::path output_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output_dir);
  return fs::path(cfg.output_dir) / name;
}

std::string describe_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.label() << " (order " << g.order() << ", ";
  if (const auto s = abelian_structure(g)) {
    os << "abelian, factors";
    if (s->factors.empty()) os << " none";
    for (int d : s->factors) os << ' ' << d;
  } else {
    os << "non-abelian";
  }
  os << ")";
  return os.str();
}

TupleVertex parse_target(const FiniteGroup& g, Index m, const std::string& text) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto e = g.find(item);
    if (!e) throw PreconditionError("unknown element '" + item + "' in --target");
    coords.push_back(*e);
  }
  if (static_cast<Index>(coords.size()) != m)
    throw PreconditionError("--target must list exactly m = " + std::to_string(m) + " elements");
  return TupleVertex::from_coords(TupleCodec(g.order(), m), std::move(coords));
}

void print_histogram(std::ostream& out, const Spectrum& s, double tol) {
  out << "histogram:";
  for (const auto& [value, mult] : s.histogram(tol)) out << ' ' << fmt_value(value) << "^" << mult;
  out << '\n';
}

Spectrum graph_spectrum(const Graph& gr, const Caps& caps, bool want_exact) {
  const auto& tag = gr.script_tag();
  if (want_exact) {
    if (!tag || !tag->abelian) throw PreconditionError("--exact needs an abelian group");
    return abelian_spectrum(*tag->abelian, tag->m, caps);
  }
  return spectrum_numeric(gr, caps);
}

bool certify(const Graph& gr, Index m, const Caps& caps) {
  require_within(gr.vertex_count(), caps.exact_cap, "exact certificate size");
  return certify_lambda_min_above(gr.adjacency_matrix<std::int64_t>(), interval_count(m));
}

// --- subcommands -----------------------------------------------------------

int cmd_group_info(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  out << "group: " << describe_group(g) << '\n';
  out << "elements:\n";
  for (int a = 0; a < g.order(); ++a)
    out << "  " << std::setw(3) << a << "  " << g.name(a) << "  order " << g.element_order(a) << '\n';
  return kOk;
}

int cmd_graph_build(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const auto gr = build_script_graph(g, cfg.m, cfg.caps);
  out << "graph: G_" << cfg.m << "(" << g.label() << ")\n";
  out << "vertices: " << gr.vertex_count() << '\n';
  out << "degree: " << fmt_value(static_cast<double>(gr.degree_if_regular().value_or(-1))) << '\n';
  out << "edges: " << gr.edge_count() << '\n';
  out << "connected: " << yes_no(gr.is_connected()) << '\n';
  if (cfg.export_format == "mm") {
    const auto path = output_path(cfg, "graph_" + stem(g, cfg) + ".mtx");
    std::ofstream f(path);
    write_graph_matrix_market(f, gr);
    out << "exported: " << path.string() << '\n';
  } else if (cfg.export_format == "edges") {
    const auto path = output_path(cfg, "graph_" + stem(g, cfg) + ".edges");
    std::ofstream f(path);
    write_edge_list(f, gr);
    out << "exported: " << path.string() << '\n';
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const auto gr = build_script_graph(g, cfg.m, cfg.caps);
  const auto s = graph_spectrum(gr, cfg.caps, cfg.exact);
  const Index degree = gr.degree_if_regular().value_or(-1);
  if (cfg.json) {
    nlohmann::ordered_json doc;
    doc["graph"] = "G_" + std::to_string(cfg.m) + "(" + g.label() + ")";
    doc["n"] = g.order();
    doc["m"] = cfg.m;
    doc["degree"] = degree;
    doc["lambda_min"] = s.lambda_min;
    doc["lambda_max"] = s.lambda_max;
    doc["exact"] = s.exact;
    auto hist = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : s.histogram(cfg.hist_tol)) hist.push_back({value, mult});
    doc["histogram"] = std::move(hist);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "graph: G_" << cfg.m << "(" << g.label() << "), " << gr.vertex_count() << " vertices, degree "
      << degree << '\n';
  out << "spectrum: " << (s.exact ? "exact (character formula)" : "numeric") << '\n';
  out << "lambda_min: " << fmt_value(s.lambda_min) << '\n';
  out << "lambda_max: " << fmt_value(s.lambda_max) << '\n';
  print_histogram(out, s, cfg.hist_tol);
  return kOk;
}

int cmd_clique(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const auto gr = build_script_graph(g, cfg.m, cfg.caps);
  const auto omega = max_clique_exact(gr, cfg.caps);
  const Index expected = std::max<Index>(g.order(), cfg.m + 1);
  const TupleCodec codec(g.order(), cfg.m);
  out << "omega: " << omega.size() << '\n';
  out << "max(n, m+1): " << expected << '\n';
  out << "equal: " << yes_no(static_cast<Index>(omega.size()) == expected)
      << (cfg.m > 2 ? "" : " (the formula is stated for m > 2)") << '\n';
  out << "maximum clique:";
  for (Index v : omega) out << ' ' << v;
  out << '\n';

  bool ok = is_clique(gr, omega);
  if (g.order() >= 2) {
    const auto chain = chain_clique(g, cfg.m, 1);
    const bool good = is_clique(gr, chain) && static_cast<Index>(chain.size()) == cfg.m + 1;
    out << "chain clique (x = " << g.name(1) << "): size " << chain.size() << ", verified "
        << yes_no(good) << '\n';
    ok = ok && good;
  }
  const auto base = TupleVertex::from_code(codec, 0);
  Index checked = 0, good = 0;
  for (int k = 1; k <= cfg.m; ++k)
    for (int l = k + 1; l <= cfg.m + 1; ++l, ++checked) {
      const auto c = interval_clique(g, cfg.m, base, k, l);
      if (is_clique(gr, c) && static_cast<Index>(c.size()) == g.order()) ++good;
    }
  out << "interval cliques at e: " << good << "/" << checked << " verified, size " << g.order() << '\n';
  return ok && good == checked ? kOk : kVerificationFailed;
}

int cmd_delsarte(const RunConfig& cfg, std::ostream& out) {
  Graph gr;
  if (!cfg.graph_file.empty()) {
    std::ifstream f(cfg.graph_file);
    if (!f) throw PreconditionError("cannot open " + cfg.graph_file);
    gr = fs::path(cfg.graph_file).extension() == ".mtx" ? read_graph_matrix_market(f) : read_edge_list(f);
    out << "graph: " << cfg.graph_file << '\n';
  } else {
    if (cfg.group_spec.empty() || cfg.m < 1) throw PreconditionError("delsarte needs --graph or --spec with --m");
    const auto g = load(cfg);
    gr = build_script_graph(g, cfg.m, cfg.caps);
    out << "graph: G_" << cfg.m << "(" << g.label() << ")\n";
  }
  const auto k = gr.degree_if_regular();
  if (!k) throw PreconditionError("Delsarte bound requires a regular graph");
  const auto& tag = gr.script_tag();
  const auto s = graph_spectrum(gr, cfg.caps, tag && tag->abelian);
  const Index bound = delsarte_bound(gr, cfg.caps);
  out << "vertices: " << gr.vertex_count() << '\n';
  out << "k: " << *k << '\n';
  out << "lambda_min: " << fmt_value(s.lambda_min) << (s.exact ? " (exact)" : "") << '\n';
  out << "delsarte bound: " << bound << '\n';
  if (gr.vertex_count() <= cfg.caps.clique_cap) {
    const auto omega = static_cast<Index>(max_clique_exact(gr, cfg.caps).size());
    out << "omega: " << omega << '\n';
    out << "omega <= bound: " << yes_no(omega <= bound) << '\n';
    if (omega > bound) return kVerificationFailed;
  } else {
    out << "omega: skipped (above clique cap " << cfg.caps.clique_cap << ")\n";
  }
  return kOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const auto gr = build_script_graph(g, cfg.m, cfg.caps);
  const bool verdict = certify(gr, cfg.m, cfg.caps);
  out << "certify: lambda_min > -" << interval_count(cfg.m) << ": " << (verdict ? "true" : "false") << '\n';
  return verdict ? kOk : kVerificationFailed;
}

int cmd_system_build(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const auto ts = build_system(g, cfg.m, cfg.caps);
  const auto shape = system_shape(ts);
  const auto gr = build_script_graph(g, cfg.m, cfg.caps);
  const bool gram = gram_identity_check(ts, gr);
  out << "system: " << shape.rows << " x " << shape.cols << '\n';
  out << "row sums = " << g.order() << ": " << yes_no(shape.row_sums_ok) << '\n';
  out << "column sums = " << interval_count(cfg.m) << ": " << yes_no(shape.col_sums_ok) << '\n';
  out << "gram identity: " << yes_no(gram) << '\n';
  if (cfg.export_format == "mm") {
    const auto path = output_path(cfg, "system_" + stem(g, cfg) + ".mtx");
    std::ofstream f(path);
    write_matrix_market(f, ts.b_matrix<std::int64_t>(), MMField::integer, MMSymmetry::general);
    out << "exported: " << path.string() << '\n';
  }
  return shape.row_sums_ok && shape.col_sums_ok && gram ? kOk : kVerificationFailed;
}

TraceIdentity solve_mode(const TraceSystem& ts, const TupleVertex& target, const std::string& mode,
                         const Caps& caps) {
  require_within(ts.col_count(), caps.exact_cap, "exact solve size");
  if (mode == "minimal") return minimal_upsilon(ts, target).second;
  return solve_submatrix(ts, target);
}

void emit_identity(const RunConfig& cfg, const TraceIdentity& id, const FiniteGroup& g, std::ostream& out) {
  if (cfg.format == "text" || cfg.format == "both") out << render_text(id, g);
  const std::string doc = render_structured(id, g);
  if (!cfg.output_file.empty()) {
    const fs::path p(cfg.output_file);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream(p) << doc;
    out << "written: " << p.string() << '\n';
  } else if (cfg.format == "structured" || cfg.format == "both") {
    out << doc;
  }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const auto ts = build_system(g, cfg.m, cfg.caps);
  const auto target = parse_target(g, cfg.m, cfg.target);
  const auto id = solve_mode(ts, target, cfg.mode, cfg.caps);
  const bool ok = verify_identity(ts, id);
  emit_identity(cfg, id, g, out);
  out << "upsilon: " << id.upsilon << '\n';
  out << "terms: " << id.terms.size() << '\n';
  out << "verify: " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::ifstream f(cfg.identity_file);
  if (!f) throw PreconditionError("cannot open " + cfg.identity_file);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::shared_ptr<const FiniteGroup> group;
  Index m = 0;
  TraceIdentity id;
  const TableOptions opts{cfg.caps.assoc_cap, cfg.unchecked_assoc};
  if (first != std::string::npos && text[first] == '{') {
    auto parsed = parse_structured(text, opts);
    group = parsed.group;
    m = parsed.m;
    id = std::move(parsed.identity);
  } else {
    if (cfg.group_spec.empty() || cfg.m < 1)
      throw PreconditionError("text identities need --spec and --m");
    group = std::make_shared<const FiniteGroup>(load(cfg));
    m = cfg.m;
    id = parse_text(text, *group, m);
  }
  const TraceSystem ts(group, m, cfg.caps);
  const bool ok = verify_identity(ts, id);
  out << "identity: " << id.terms.size() << " terms, upsilon " << id.upsilon << ", group "
      << group->label() << ", m " << m << '\n';
  out << "verify: " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  const auto g = load(cfg);
  const Index n = g.order();
  out << "group: " << describe_group(g) << '\n';
  const auto gr = build_script_graph(g, cfg.m, cfg.caps);
  out << "graph: G_" << cfg.m << "(" << g.label() << "): " << gr.vertex_count() << " vertices, degree "
      << gr.degree_if_regular().value_or(-1) << ", " << gr.edge_count() << " edges\n";

  const auto& tag = gr.script_tag();
  const auto s = graph_spectrum(gr, cfg.caps, tag && tag->abelian);
  out << "spectrum: " << (s.exact ? "exact" : "numeric") << ", lambda_min " << fmt_value(s.lambda_min)
      << ", lambda_max " << fmt_value(s.lambda_max) << '\n';
  print_histogram(out, s, cfg.hist_tol);

  const bool cert = certify(gr, cfg.m, cfg.caps);
  out << "certify: lambda_min > -" << interval_count(cfg.m) << ": " << (cert ? "true" : "false") << '\n';
  if (!cert) {
    out << "solve: skipped, the spectral precondition fails\n";
    return kPrecondition;
  }

  const auto ts = build_system(g, cfg.m, cfg.caps);
  const auto shape = system_shape(ts);
  const bool gram = gram_identity_check(ts, gr);
  out << "system: " << shape.rows << " x " << shape.cols << ", gram identity " << yes_no(gram) << '\n';

  const auto target = cfg.target.empty() ? TupleVertex::from_code(ts.codec(), 0)
                                          : parse_target(g, cfg.m, cfg.target);
  const auto sub = solve_mode(ts, target, "submatrix", cfg.caps);
  const auto min = solve_mode(ts, target, "minimal", cfg.caps);
  const bool sub_ok = verify_identity(ts, sub);
  const bool min_ok = verify_identity(ts, min);
  out << "solve (submatrix): upsilon " << sub.upsilon << ", " << sub.terms.size() << " terms, verify "
      << (sub_ok ? "ok" : "FAILED") << '\n';
  out << "solve (minimal): upsilon " << min.upsilon << ", " << min.terms.size() << " terms, verify "
      << (min_ok ? "ok" : "FAILED") << '\n';
  out << "identity:\n" << render_text(min, g);

  const bool divisible = min.upsilon % n == 0;
  const bool divides = sub.upsilon % min.upsilon == 0;
  out << "upsilon diagnostics:\n";
  out << "  n divides upsilon: " << yes_no(divisible) << '\n';
  out << "  minimal divides submatrix upsilon: " << yes_no(divides) << '\n';
  out << "  lower bound n: " << n << '\n';
  if (n >= 2) {
    const double log_bound = hadamard_log_bound(n);
    out << "  log2 Hadamard bound: " << fmt_value(log_bound) << '\n';
    out << "  log2 upsilon: " << fmt_value(std::log2(min.upsilon.convert_to<double>())) << '\n';
  }
  return sub_ok && min_ok && gram && divisible && divides ? kOk : kVerificationFailed;
}

void add_group_options(CLI::App* sub, RunConfig& cfg, bool need_m = true) {
  sub->add_option("--spec", cfg.group_spec, "family string (C3, C2xC2, S3, D4, Q8, ...) or table document path")
      ->required();
  if (need_m) sub->add_option("--m", cfg.m, "tuple length m")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.caps = Caps::from_environment();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }

  CLI::App app{"Cayley graphs of group powers, their spectra and generic trace identities", "trid"};
  app.require_subcommand(1);
  app.add_option("--vertex-cap", cfg.caps.vertex_cap, "max vertices of G_m(G) / columns of B (env TRID_VERTEX_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--eigen-cap", cfg.caps.eigen_cap, "max size for the dense eigensolver (env TRID_EIGEN_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--clique-cap", cfg.caps.clique_cap, "max vertices for exact clique search (env TRID_CLIQUE_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--assoc-cap", cfg.caps.assoc_cap, "max order for the exhaustive associativity check (env TRID_ASSOC_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--exact-cap", cfg.caps.exact_cap, "max size for dense exact elimination (env TRID_EXACT_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-unchecked-associativity", cfg.unchecked_assoc,
               "accept tables above the associativity cap without checking");

  std::function<int(const RunConfig&, std::ostream&)> action;
  const auto bind = [&](CLI::App* sub, int (*fn)(const RunConfig&, std::ostream&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* group = app.add_subcommand("group", "group tables")->require_subcommand(1);
  auto* group_info = group->add_subcommand("info", "order, abelian decomposition and element orders");
  add_group_options(group_info, cfg, false);
  bind(group_info, cmd_group_info);

  auto* graph = app.add_subcommand("graph", "the graph G_m(G)")->require_subcommand(1);
  auto* graph_build = graph->add_subcommand("build", "build G_m(G) and optionally export it");
  add_group_options(graph_build, cfg);
  graph_build->add_option("--export", cfg.export_format, "mm or edges")->check(CLI::IsMember({"mm", "edges"}));
  graph_build->add_option("--out", cfg.output_dir, "export directory");
  bind(graph_build, cmd_graph_build);

  auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum of G_m(G)");
  add_group_options(spectrum, cfg);
  spectrum->add_flag("--exact", cfg.exact, "use the integer character formula (abelian groups)");
  spectrum->add_flag("--json", cfg.json, "structured report");
  spectrum->add_option("--hist-tol", cfg.hist_tol, "grouping tolerance for numeric eigenvalues")->capture_default_str();
  bind(spectrum, cmd_spectrum);

  auto* clique = app.add_subcommand("clique", "exact clique number and the chain and interval cliques");
  add_group_options(clique, cfg);
  bind(clique, cmd_clique);

  auto* delsarte = app.add_subcommand("delsarte", "Delsarte clique bound of a regular graph");
  auto* graph_opt = delsarte->add_option("--graph", cfg.graph_file, "edge list or .mtx file");
  auto* spec_opt = delsarte->add_option("--spec", cfg.group_spec, "group family or table document");
  delsarte->add_option("--m", cfg.m, "tuple length m")->check(CLI::PositiveNumber)->needs(spec_opt);
  graph_opt->excludes(spec_opt);
  delsarte->add_option("--hist-tol", cfg.hist_tol, "grouping tolerance for numeric eigenvalues")->capture_default_str();
  bind(delsarte, cmd_delsarte);

  auto* cert = app.add_subcommand("certify", "exact check of lambda_min > -C(m+1,2)");
  add_group_options(cert, cfg);
  bind(cert, cmd_certify);

  auto* system = app.add_subcommand("system", "the trace relation matrix B")->require_subcommand(1);
  auto* system_build = system->add_subcommand("build", "build B, check its shape and the Gram identity");
  add_group_options(system_build, cfg);
  system_build->add_option("--export", cfg.export_format, "mm")->check(CLI::IsMember({"mm"}));
  system_build->add_option("--out", cfg.output_dir, "export directory");
  bind(system_build, cmd_system_build);

  auto* solve = app.add_subcommand("solve", "solve for a trace identity");
  add_group_options(solve, cfg);
  solve->add_option("--target", cfg.target, "target monomial g1,...,gm (names or indices)")->required();
  solve->add_option("--mode", cfg.mode, "submatrix or minimal")
      ->capture_default_str()
      ->check(CLI::IsMember({"submatrix", "minimal"}));
  solve->add_option("--format", cfg.format, "text, structured or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "structured", "both"}));
  solve->add_option("--output", cfg.output_file, "write the structured identity to this file");
  bind(solve, cmd_solve);

  auto* verify = app.add_subcommand("verify", "verify an identity by exact expansion");
  verify->add_option("--identity", cfg.identity_file, "structured (JSON) or text identity file")->required();
  verify->add_option("--spec", cfg.group_spec, "group, for text identities");
  verify->add_option("--m", cfg.m, "tuple length, for text identities")->check(CLI::PositiveNumber);
  bind(verify, cmd_verify);

  auto* report = app.add_subcommand("report", "graph, spectrum, certificate, identities and diagnostics");
  add_group_options(report, cfg);
  report->add_option("--target", cfg.target, "target monomial (default e,...,e)");
  report->add_option("--hist-tol", cfg.hist_tol, "grouping tolerance for numeric eigenvalues")->capture_default_str();
  bind(report, cmd_report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    return action(cfg, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace trid::cli
