#include "qrcomp/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>

#include "qrcomp/characterize.hpp"
#include "qrcomp/compose.hpp"
#include "qrcomp/mc_oracle.hpp"
#include "qrcomp/query_engine.hpp"
#include "qrcomp/spec_files.hpp"
#include "qrcomp/synthesize.hpp"

namespace qrcomp {

namespace fs = std::filesystem;

namespace {

// Carries an exit status and a message already prefixed with its file.
struct CliFailure {
  int code;
  std::string message;
};

template <class Fn>
auto with_file(const fs::path& path, Fn fn) -> decltype(fn(std::string_view{})) {
  const std::string text = [&] {
    try {
      return read_text_file(path);
    } catch (const IoError& e) {
      throw CliFailure{kExitUsage, e.what()};
    }
  }();
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw CliFailure{kExitParse, fmt::format("{}:{}", path.string(), e.what())};
  } catch (const ValidationError& e) {
    throw CliFailure{kExitValidation,
                     e.where() ? fmt::format("{}:{}", path.string(), e.what())
                               : fmt::format("{}: {}", path.string(), e.what())};
  }
}


std::vector<ComponentSpec> load_specs(const fs::path& p) {
  return with_file(p, [](std::string_view t) { return parse_component_specs(t); });
}

SystemGraph load_graph(const fs::path& p, const std::vector<ComponentSpec>& specs) {
  std::set<std::string> known;
  for (const auto& s : specs) known.insert(s.name);
  return with_file(p, [&](std::string_view t) { return parse_system_file(t, known); });
}

std::optional<ParallelPolicy> parse_policy(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto p = policy_from_name(s);
  if (!p) throw CliFailure{kExitUsage, fmt::format("unknown parallel mode '{}'", s)};
  return p;
}

Table model_table(const QRModel& m, const std::string& title) {
  Table t;
  t.title = title;
  t.headers = {"state", "configuration", "input_levels", "output_values", "expression",
               "value",  "failure_to",    "suspend_to"};
  const Assignment values = m.assignment();
  std::vector<std::vector<std::string>> fail_to(m.size());
  std::vector<std::vector<std::string>> susp_to(m.size());
  for (const Edge& e : m.failure_edges()) fail_to[e.from].push_back(m.state(e.to).config.str());
  for (const Edge& e : m.suspend_edges()) susp_to[e.from].push_back(m.state(e.to).config.str());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const ModelState& s = m.state(i);
    nlohmann::json fj = fail_to[i];
    nlohmann::json sj = susp_to[i];
    t.rows.push_back({Cell::integer(static_cast<long long>(i + 1)), Cell::of(s.config.str()),
                      Cell{s.quality.render_levels(), s.quality.levels()},
                      Cell{s.quality.render_outputs(), s.quality.outputs()},
                      Cell::of(render_state_expr(s.config, m.layout())),
                      Cell::number(poly_eval(s.expr, values), 5),
                      Cell{fmt::format("{}", fmt::join(fail_to[i], " ")), fj},
                      Cell{fmt::format("{}", fmt::join(susp_to[i], " ")), sj}});
  }
  t.footnotes.push_back(fmt::format("slots: {}", fmt::join(m.layout().components, " ")));
  return t;
}

Table spec_table(const SystemQRSpec& spec, const QRModel& abstract) {
  Table t;
  t.title = "system specification";
  t.headers = {"mode", "configuration", "reliability", "input_levels", "output_values"};
  for (std::size_t i = 0; i < spec.modes.size(); ++i) {
    const SystemMode& m = spec.modes[i];
    t.rows.push_back({Cell{render_mode_tuple(m.modes, spec.components), m.modes},
                      Cell::of(abstract.state(i).config.str()), Cell::number(m.reliability, 5),
                      Cell{m.quality.render_levels(), m.quality.levels()},
                      Cell{m.quality.render_outputs(), m.quality.outputs()}});
  }
  t.footnotes.push_back(fmt::format("input levels: {}", [&] {
    std::vector<std::string> parts;
    for (double l : spec.input_levels) parts.push_back(format_number(l));
    return fmt::format("{}", fmt::join(parts, ","));
  }()));
  return t;
}

Table conformance_table(const ConformanceReport& r) {
  Table t;
  t.title = "conformance";
  t.headers = {"mode", "verdict", "derived_reliability", "expected_reliability", "derived_quality",
               "expected_quality", "detail"};
  auto rel = [](const std::optional<double>& v) {
    return v ? Cell::number(*v, 5) : Cell{"-", nullptr};
  };
  auto qual = [](const std::optional<QualityMap>& q) {
    if (!q) return Cell{"-", nullptr};
    return Cell{q->render(), nlohmann::json{{"levels", q->levels()}, {"outputs", q->outputs()}}};
  };
  if (!r.components_match) {
    t.footnotes.push_back(fmt::format("derived components [{}] vs expected [{}]",
                                      fmt::join(r.components, " "), fmt::join(r.given_components, " ")));
  }
  for (const ModeComparison& m : r.modes) {
    t.rows.push_back({Cell{render_mode_tuple(m.modes, r.components), m.modes},
                      Cell::of(std::string(verdict_name(m.verdict))), rel(m.derived_reliability),
                      rel(m.given_reliability), qual(m.derived_quality), qual(m.given_quality),
                      Cell::of(m.detail)});
  }
  t.footnotes.push_back(r.summary());
  return t;
}

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 42;
  double tolerance = 1e-9;

  OutputFormat output() const {
    if (format == "csv") return OutputFormat::Csv;
    if (format == "json") return OutputFormat::Json;
    return OutputFormat::Text;
  }
};

int execute_queries(const std::vector<Query>& queries, const QueryOptions& options, const Globals& g,
                    std::ostream& out, std::ostream& err) {
  std::vector<Table> tables;
  for (const Query& q : queries) {
    std::vector<std::string> warnings;
    QueryOptions o = options;
    ResultTable result;
    try {
      result = run_query(q, o, &warnings);
    } catch (const IoError& e) {
      throw CliFailure{kExitUsage, e.what()};
    } catch (const ParseError& e) {
      throw CliFailure{kExitParse, e.what()};
    } catch (const ValidationError& e) {
      throw CliFailure{kExitValidation, e.what()};
    }
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    tables.push_back(to_table(result));
  }
  out << render(tables, g.output());
  return kExitOk;
}

QueryOptions query_options(const fs::path& base, const std::string& system, const std::string& qrspec,
                           const std::string& policy, const Globals& g) {
  QueryOptions o;
  o.base_dir = base;
  if (!system.empty()) o.system_override = system;
  if (!qrspec.empty()) o.qrspec_override = qrspec;
  o.policy_override = parse_policy(policy);
  o.tolerance = g.tolerance;
  return o;
}

int run_repl(const QueryOptions& options, const Globals& g, std::istream& in, std::ostream& out,
             std::ostream& err) {
  std::string buffer;
  std::string line;
  err << "sqdl> " << std::flush;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (buffer.empty() && (trimmed == "quit" || trimmed == "exit")) break;
    if (buffer.empty() && trimmed == "help") {
      out << "enter begin_query ... end_query blocks; 'quit' leaves\n";
      err << "sqdl> " << std::flush;
      continue;
    }
    buffer += line + "\n";
    if (trimmed.find("end_query") == std::string::npos) {
      err << (buffer.find_first_not_of(" \t\r\n") == std::string::npos ? "sqdl> " : "....> ")
          << std::flush;
      if (buffer.find_first_not_of(" \t\r\n") == std::string::npos) buffer.clear();
      continue;
    }
    try {
      execute_queries(parse_queries(buffer), options, g, out, err);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
    } catch (const CliFailure& f) {
      err << "error: " << f.message << "\n";
    }
    buffer.clear();
    err << "sqdl> " << std::flush;
  }
  if (buffer.find_first_not_of(" \t\r\n") != std::string::npos) {
    err << "error: unterminated query block at end of input\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quality and reliability modelling of component-based systems", "qrcomp"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", g.seed, "Seed for the Monte-Carlo oracle");
  app.add_option("--tolerance", g.tolerance, "Numeric tolerance for comparisons")
      ->check(CLI::NonNegativeNumber);

  std::string system, qrspec, expected, component, policy, query_file;
  bool dump = false, stats = false, emit_spec = false;
  std::uint64_t trials = 100000;

  auto* characterize = app.add_subcommand("characterize", "Dump the state model of one component");
  characterize->add_option("--qrspec", qrspec, "Component specification file")->required();
  characterize->add_option("--component", component, "Component name")->required();

  auto add_model_inputs = [&](CLI::App* sub) {
    sub->add_option("--system", system, "System structure file")->required();
    sub->add_option("--qrspec", qrspec, "Component specification file")->required();
    sub->add_option("--parallel-mode", policy, "Parallel policy: max or ordered")
        ->check(CLI::IsMember({"max", "ordered"}));
  };
  auto* compose = app.add_subcommand("compose", "Build the system state model");
  add_model_inputs(compose);
  auto* dump_flag = compose->add_flag("--dump-states", dump, "Print every state (default)");
  compose->add_flag("--stats", stats, "Print state and transition counts")->excludes(dump_flag);

  auto* synthesize = app.add_subcommand("synthesize", "Derive the system-level specification");
  add_model_inputs(synthesize);
  synthesize->add_flag("--emit-spec", emit_spec, "Print the derived specification in .qrs form");

  auto* conform = app.add_subcommand("conform", "Check the derived specification against an expected one");
  add_model_inputs(conform);
  conform->add_option("--expected", expected, "Expected system specification (.qrs)")->required();

  auto* query = app.add_subcommand("query", "Run the query blocks of an SQDL file");
  query->add_option("--file", query_file, "SQDL file")->required();
  query->add_option("--system", system, "Override the system file of every query");
  query->add_option("--qrspec", qrspec, "Override the component specification of every query");
  query->add_option("--parallel-mode", policy, "Parallel policy override")
      ->check(CLI::IsMember({"max", "ordered"}));

  auto* repl = app.add_subcommand("repl", "Read query blocks from standard input");
  repl->add_option("--system", system, "Override the system file of every query");
  repl->add_option("--qrspec", qrspec, "Override the component specification of every query");
  repl->add_option("--parallel-mode", policy, "Parallel policy override")
      ->check(CLI::IsMember({"max", "ordered"}));

  auto* oracle = app.add_subcommand("oracle", "Compare analytic values with simulation");
  add_model_inputs(oracle);
  oracle->add_option("--trials", trials, "Trials per state")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = g.output();
  try {
    if (characterize->parsed()) {
      const auto specs = load_specs(qrspec);
      const ComponentSpec* spec = find_spec(specs, component);
      if (!spec) throw CliFailure{kExitValidation, fmt::format("{}: no component named {}", qrspec, component)};
      const QRModel m = build_component_model(*spec);
      out << render(model_table(m, fmt::format("component {} ({} states)", spec->name, m.size())), format);
      return kExitOk;
    }

    if (query->parsed()) {
      const fs::path file(query_file);
      const auto queries = with_file(file, [](std::string_view t) { return parse_queries(t); });
      return execute_queries(queries, query_options(file.parent_path(), system, qrspec, policy, g), g,
                             out, err);
    }

    if (repl->parsed()) {
      return run_repl(query_options(fs::current_path(), system, qrspec, policy, g), g, in, out, err);
    }

    const auto specs = load_specs(qrspec);
    const SystemGraph graph = load_graph(system, specs);
    const ParallelPolicy p = parse_policy(policy).value_or(graph.policy());
    const QRModel model = build_system_model(graph, specs, p);

    if (compose->parsed()) {
      if (stats) {
        const QRModel abstract = abstract_failure_model(model);
        Table t;
        t.title = "model statistics";
        t.headers = {"states", "failure_edges", "suspend_edges", "abstract_states", "abstract_edges"};
        t.rows.push_back({Cell::integer(static_cast<long long>(model.size())),
                          Cell::integer(static_cast<long long>(model.failure_edges().size())),
                          Cell::integer(static_cast<long long>(model.suspend_edges().size())),
                          Cell::integer(static_cast<long long>(abstract.size())),
                          Cell::integer(static_cast<long long>(abstract.failure_edges().size()))});
        if (format == OutputFormat::Text) {
          out << fmt::format("states={} failure_edges={} suspend_edges={}\n", model.size(),
                             model.failure_edges().size(), model.suspend_edges().size());
          out << fmt::format("abstract_states={} abstract_failure_edges={}\n", abstract.size(),
                             abstract.failure_edges().size());
        } else {
          out << render(t, format);
        }
        return kExitOk;
      }
      out << render(model_table(model, fmt::format("system model ({} states, {} policy)", model.size(),
                                                   policy_name(p))),
                    format);
      return kExitOk;
    }

    if (synthesize->parsed()) {
      const SystemQRSpec spec = emit_system_qrspec(graph, specs, model);
      if (emit_spec) {
        out << render_system_spec(spec);
      } else {
        out << render(spec_table(spec, abstract_failure_model(model)), format);
      }
      return kExitOk;
    }

    if (conform->parsed()) {
      const SystemQRSpec derived = emit_system_qrspec(graph, specs, model);
      const SystemQRSpec given =
          with_file(expected, [](std::string_view t) { return parse_system_spec(t); });
      const ConformanceReport report = check_conformance(derived, given, g.tolerance);
      out << render(conformance_table(report), format);
      if (format == OutputFormat::Text) out << report.summary() << "\n";
      return report.passed() ? kExitOk : kExitNonconformant;
    }

    if (oracle->parsed()) {
      const auto rows = cross_validate(graph, specs, model, trials, g.seed);
      out << render(oracle_table(rows, trials, g.seed), format);
      return kExitOk;
    }
  } catch (const CliFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qrcomp
