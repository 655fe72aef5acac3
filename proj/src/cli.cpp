#include "scup/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "scup/json_io.hpp"

namespace scup {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "D";
  int n = 0;
  int k = -1;
  std::string parity = "all";
  std::string diagram;
  std::string params;
  std::string flag_path;
  int samples = 25;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string format;
  std::string out_dir;
  std::string d2;
  int grid = 0;
  bool sampled = false;
  bool pretty = false;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("SPRINGER_CUP_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

Kind kind_of(const std::string& t) {
  if (t == "A") return Kind::A;
  if (t == "D") return Kind::D;
  throw UsageError("--type must be A or D here");
}

Parity parity_of(const std::string& p) {
  if (p == "even") return Parity::Even;
  if (p == "odd") return Parity::Odd;
  if (p == "all") return Parity::All;
  throw UsageError("--parity must be even, odd or all");
}

std::vector<int> ks_for(const Options& o) {
  if (o.n < 1) throw UsageError("--n is required");
  if (o.k >= 0) return {o.k};
  std::vector<int> ks;
  for (int k = 1; k <= o.n / 2; ++k)
    if (kind_of(o.type) == Kind::A || TwoRowPartition{o.n, k}.type_d_admissible()) ks.push_back(k);
  return ks;
}

std::vector<CupDiagram> diagrams_for(const Options& o) {
  if (!o.diagram.empty()) return {parse_diagram(o.diagram)};
  std::vector<CupDiagram> out;
  for (int k : ks_for(o)) {
    auto part = kind_of(o.type) == Kind::A ? enumerate_type_A(o.n, k)
                                            : enumerate_type_D(o.n, k, parity_of(o.parity));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw UsageError("--seed is required for sampling");
  return *o.seed;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string subspace_text(const Subspace& s, const TwoRowPartition& lam) {
  std::string out = "<";
  for (int r = 0; r < s.dim(); ++r) {
    std::string vec;
    const Vec& v = s.rows()[r];
    for (int c = 0; c < s.ambient(); ++c) {
      if (v[c].is_zero()) continue;
      std::string basis = c < lam.first() ? "e" + std::to_string(c + 1)
                                          : "f" + std::to_string(c - lam.first() + 1);
      std::string coef = v[c].to_string();
      bool neg = v[c].is_rational() && v[c].coeff(0) < 0;
      if (neg) coef = (-v[c]).to_string();
      if (!v[c].is_rational()) coef = "(" + coef + ")";
      std::string term = coef == "1" ? basis : coef + basis;
      vec += vec.empty() ? (neg ? "-" : "") + term : (neg ? " - " : " + ") + term;
    }
    out += (r ? ", " : "") + vec;
  }
  return out + ">";
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto ds = diagrams_for(o);
  if (o.pretty) {
    for (const auto& d : ds) out << format_diagram(d) << "\n";
    out << ds.size() << " diagrams\n";
    return 0;
  }
  json arr = json::array();
  for (const auto& d : ds) arr.push_back(diagram_to_json(d));
  emit(out, arr);
  return 0;
}

int cmd_build(const Options& o, std::ostream& out) {
  if (o.diagram.empty()) throw UsageError("--diagram is required");
  CupDiagram d = parse_diagram(o.diagram);
  Flag f = build_flag(d, parse_params(o.params));
  if (o.pretty) {
    TwoRowPartition lam = d.partition();
    for (int i = 1; i < f.n; ++i) out << "F_" << i << " = " << subspace_text(f[i], lam) << "\n";
    return 0;
  }
  emit(out, {{"diagram", format_diagram(d)}, {"params", format_params(parse_params(o.params))},
             {"flag", flag_to_json(f)}});
  return 0;
}

json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("io_error", "cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw JsonFormatError(e.what());
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.diagram.empty() || o.flag_path.empty()) throw UsageError("--diagram and --flag are required");
  CupDiagram d = parse_diagram(o.diagram);
  json j = read_json_file(o.flag_path);
  Flag f = flag_from_json(j.contains("flag") ? j.at("flag") : j);
  MembershipReport rep = check_membership(f, d);
  if (o.pretty) {
    out << (rep.ok() ? "member" : to_string(rep.status)) << "\n";
    for (const auto& fl : rep.failures) out << "  vertex " << fl.vertex << ": " << fl.rule << "\n";
    return 0;
  }
  json r = membership_to_json(rep);
  r["diagram"] = format_diagram(d);
  emit(out, r);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::uint64_t seed = require_seed(o);
  if (o.samples < 1) throw UsageError("--samples must be positive");
  auto ds = diagrams_for(o);
  std::vector<ComponentReport> reps(ds.size());
  std::vector<std::vector<VerifyFailure>> trips(ds.size());
  // Each diagram draws from its own seeded stream, so the split over threads
  // never changes the output.
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(o.jobs);
  auto worker = [&](unsigned id) {
    try {
      for (size_t i; (i = next++) < ds.size();) {
        reps[i] = verify_component(ds[i], o.samples, seed);
        trips[i] = verify_round_trips(ds[i], std::max(1, o.samples / 5), seed);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < o.jobs; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  size_t total = 0;
  json arr = json::array();
  for (size_t i = 0; i < ds.size(); ++i) {
    for (const auto& f : trips[i]) reps[i].failures.push_back(f);
    total += reps[i].failures.size();
    arr.push_back(report_to_json(reps[i]));
  }
  if (o.pretty) {
    for (const auto& r : reps)
      out << (r.ok() ? "pass " : "FAIL ") << format_diagram(r.diagram) << "  " << r.samples
          << " samples, " << r.failures.size() << " failures\n";
    out << ds.size() << " diagrams, " << total << " failures\n";
    return 0;
  }
  emit(out, {{"seed", seed}, {"samples", o.samples}, {"diagrams", arr}, {"failures", total}});
  return 0;
}

int cmd_incidence(const Options& o, std::ostream& out) {
  if (!o.d2.empty()) {
    if (o.diagram.empty()) throw UsageError("--d2 needs --diagram");
    CupDiagram d1 = parse_diagram(o.diagram), d2 = parse_diagram(o.d2);
    if (o.sampled) {
      bool hit = incidence_sampled(d1, d2, o.grid, require_seed(o));
      emit(out, {{"d1", format_diagram(d1)}, {"d2", format_diagram(d2)}, {"witness", hit}});
    } else {
      emit(out, {{"d1", format_diagram(d1)}, {"d2", format_diagram(d2)},
                 {"locus", locus_to_json(incidence_exact_P1(d1, d2))}});
    }
    return 0;
  }
  auto ds = diagrams_for(o);
  IncidenceGraph g;
  if (o.sampled) {
    std::uint64_t seed = require_seed(o);
    g.nodes = ds;
    for (size_t i = 0; i < ds.size(); ++i)
      for (size_t j = i + 1; j < ds.size(); ++j)
        if (incidence_sampled(ds[i], ds[j], o.grid, seed) || incidence_sampled(ds[j], ds[i], o.grid, seed)) {
          g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
          g.loci.push_back(Locus{Locus::Kind::Points, BinaryForm::one()});
        }
  } else {
    g = incidence_graph(ds);
  }
  if (o.format == "dot") {
    out << g.to_dot();
    return 0;
  }
  json j = graph_to_json(g);
  if (o.sampled)
    for (auto& e : j["edges"]) e["locus"] = {{"kind", "witnessed"}};
  if (o.pretty) {
    for (size_t e = 0; e < g.edges.size(); ++e)
      out << format_diagram(g.nodes[g.edges[e].first]) << " -- "
          << format_diagram(g.nodes[g.edges[e].second]) << "  "
          << (o.sampled ? "witnessed" : g.loci[e].to_string()) << "\n";
    out << g.nodes.size() << " nodes, " << g.edges.size() << " edges, "
        << g.connected_components().size() << " connected components\n";
    return 0;
  }
  emit(out, j);
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  std::string fmt = o.format.empty() ? "ascii" : o.format;
  if (fmt != "ascii" && fmt != "svg") throw UsageError("--format must be ascii or svg");
  auto ds = diagrams_for(o);
  if (!o.out_dir.empty()) {
    if (fmt != "svg") throw UsageError("--out writes SVG files; use --format svg");
    std::filesystem::create_directories(o.out_dir);
    json written = json::array();
    for (size_t i = 0; i < ds.size(); ++i) {
      std::string name = (ds[i].kind == Kind::A ? "A" : "D") + std::to_string(ds[i].n_vertices) + "_" +
                         std::to_string(i) + ".svg";
      auto path = std::filesystem::path(o.out_dir) / name;
      std::ofstream f(path);
      if (!f) throw DomainError("io_error", "cannot write " + path.string());
      f << render_svg(ds[i]);
      written.push_back({{"diagram", format_diagram(ds[i])}, {"file", path.string()}});
    }
    emit(out, written);
    return 0;
  }
  for (const auto& d : ds) {
    if (ds.size() > 1 || o.pretty) out << format_diagram(d) << "\n";
    out << (fmt == "svg" ? render_svg(d) : render_ascii(d));
    if (ds.size() > 1) out << "\n";
  }
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.k < 0) throw UsageError("--n and --k are required");
  long count = 0;
  if (o.type == "C") count = type_C_component_count(o.n, o.k);
  else count = static_cast<long>(diagrams_for(o).size());
  out << count << "\n";
  return 0;
}

void error_json(std::ostream& err, const std::string& code, const std::string& msg) {
  err << json{{"error", {{"code", code}, {"message", msg}}}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cup diagrams, Springer fiber components and their incidences", "springer-cup"};
  app.require_subcommand(1, 1);
  Options o;
  o.jobs = default_jobs();

  auto add_shape = [&](CLI::App* s, bool with_c = false) {
    s->add_option("--type", o.type, with_c ? "A, C or D" : "A or D");
    s->add_option("--n", o.n, "total size n");
    s->add_option("--k", o.k, "second part k (all admissible k when omitted)");
    s->add_option("--parity", o.parity, "even, odd or all (type D)");
  };
  auto* en = app.add_subcommand("enumerate", "list cup diagrams");
  add_shape(en);
  auto* bu = app.add_subcommand("build", "build the flag of K_d at a parameter");
  bu->add_option("--diagram", o.diagram, "diagram text, e.g. \"D4: r1 c2-3 r4\"");
  bu->add_option("--params", o.params, "comma separated a:b, one per cup");
  auto* ch = app.add_subcommand("check", "test a flag for membership in K_d");
  ch->add_option("--diagram", o.diagram, "diagram text");
  ch->add_option("--flag", o.flag_path, "flag JSON file, - for stdin");
  auto* ve = app.add_subcommand("verify", "sampled verification of components");
  add_shape(ve);
  ve->add_option("--diagram", o.diagram, "verify a single diagram");
  ve->add_option("--samples", o.samples, "parameter samples per diagram");
  ve->add_option("--seed", o.seed, "seed (required)");
  ve->add_option("--jobs", o.jobs, "worker threads (default SPRINGER_CUP_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  auto* in = app.add_subcommand("incidence", "incidence graph of P^1 components");
  add_shape(in);
  in->add_option("--diagram", o.diagram, "first diagram of a single pair");
  in->add_option("--d2", o.d2, "second diagram of a single pair");
  in->add_flag("--sampled", o.sampled, "witness search instead of exact computation");
  in->add_option("--grid", o.grid, "random points for --sampled");
  in->add_option("--seed", o.seed, "seed for --sampled");
  in->add_option("--format", o.format, "json or dot");
  auto* re = app.add_subcommand("render", "draw diagrams");
  add_shape(re);
  re->add_option("--diagram", o.diagram, "diagram text");
  re->add_option("--format", o.format, "ascii or svg");
  re->add_option("--out", o.out_dir, "directory for one SVG file per diagram");
  auto* co = app.add_subcommand("count", "count components");
  add_shape(co, true);
  for (auto* s : {en, bu, ch, ve, in, re, co}) s->add_flag("--pretty", o.pretty, "human readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return 2;
  }

  try {
    if (en->parsed()) return cmd_enumerate(o, out);
    if (bu->parsed()) return cmd_build(o, out);
    if (ch->parsed()) return cmd_check(o, out);
    if (ve->parsed()) return cmd_verify(o, out);
    if (in->parsed()) return cmd_incidence(o, out);
    if (re->parsed()) return cmd_render(o, out);
    if (co->parsed()) return cmd_count(o, out);
  } catch (const UsageError& e) {
    error_json(err, "usage", e.what());
    return 2;
  } catch (const DiagramParseError& e) {
    error_json(err, "diagram_syntax", std::string(e.what()) + " at position " + std::to_string(e.position));
    return 1;
  } catch (const DomainError& e) {
    error_json(err, e.code, e.what());
    return 1;
  } catch (const DivisionByZero& e) {
    error_json(err, "division_by_zero", e.what());
    return 1;
  } catch (const DimensionMismatch& e) {
    error_json(err, "dimension_mismatch", e.what());
    return 1;
  }
  return 2;
}

}  // namespace scup
