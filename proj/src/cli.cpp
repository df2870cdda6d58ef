#include "hirz/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hirz/bundle.hpp"
#include "hirz/error.hpp"
#include "hirz/expr_parser.hpp"
#include "hirz/motivic.hpp"
#include "hirz/poly_text.hpp"
#include "hirz/space_text.hpp"
#include "hirz/transforms.hpp"

namespace hirz {

bool Report::failed() const {
  return std::any_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return !s.pass(); });
}

namespace {

const std::string& require(const Command& c, const std::string& key) {
  auto it = c.args.find(key);
  if (it == c.args.end()) throw InvalidParameter(c.name + " needs --" + key);
  return it->second;
}

bool has(const Command& c, const std::string& key) { return c.args.count(key) != 0; }

int to_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
    throw InvalidParameter("--" + key + " expects an integer, got '" + value + "'");
  return v;
}

SpacePtr space_of(const Command& c) {
  if (has(c, "space-file")) {
    const std::string& path = c.args.at("space-file");
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read space file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return make_custom(parse_space_document(buffer.str()));
  }
  return parse_space(require(c, "space"));
}

/// Genus of a space; models with a boundary report the open complement.
LaurentY space_genus(const SpaceModel& space) {
  const Support support = space.log_structure() ? Support::OpenComplement : Support::Closed;
  return reduce_unit_denominator(degree(mht(mhc_y(space, support), space, false)));
}

std::string input_space(const Command& c) {
  return has(c, "space-file") ? c.args.at("space-file") : require(c, "space");
}

Report run_epoly(const Command& c, Report r) {
  const std::string& src = require(c, "expr");
  r.inputs = {{"expr", src}};
  const MotivicClass m = evaluate(parse_expr(src));
  r.results = {{"E", render(e_polynomial(m))}};
  return r;
}

Report run_genus(const Command& c, Report r) {
  if (has(c, "motivic")) {
    const std::string& src = c.args.at("motivic");
    r.inputs = {{"motivic", src}};
    r.results = {{"chi_c_y", render(chi_c_y(evaluate(parse_expr(src))))}};
    return r;
  }
  r.inputs = {{"space", input_space(c)}};
  r.results = {{"chi_y", render(space_genus(*space_of(c)))}};
  return r;
}

Report run_classes(const Command& c, Report r) {
  const std::string& name = require(c, "series");
  SeriesKind kind;
  if (name == "chern") kind = SeriesKind::Chern;
  else if (name == "todd") kind = SeriesKind::Todd;
  else if (name == "l") kind = SeriesKind::LClass;
  else if (name == "ty") kind = SeriesKind::Hirzebruch;
  else throw InvalidParameter("unknown series '" + name + "' (expected chern, todd, l or ty)");
  const SpacePtr space = space_of(c);
  r.inputs = {{"space", input_space(c)}, {"series", name}};
  const CohClassY value = apply_series(genus_series(kind, std::max(space->dim(), 1)), space->tangent_bundle());
  r.results = {{"class", render(value)}, {"integral", render(integrate(value))}};
  return r;
}

Report run_arrangement(const Command& c, Report r) {
  const int n = to_int("n", require(c, "n"));
  const int k = to_int("k", require(c, "k"));
  const std::string& op = require(c, "op");
  r.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"op", op}};
  const SpacePtr arr = make_arrangement(n, k);
  if (op == "csm") {
    r.results = {{"csm", render(csm_arrangement(n, k), *arr)}};
  } else if (op == "mht") {
    const HomClassY t = mht(mhc_y(*arr, Support::OpenComplement), *arr, true);
    r.results = {{"mht", render(t, *arr)}, {"at y=-1", render(specialize_minus_one(t), *arr)}};
  } else if (op == "genus") {
    r.results = {{"chi_y", render(space_genus(*arr))},
                 {"chi_c_y", render(chi_c_y(motivic_arrangement_complement(n, k)))}};
  } else {
    throw InvalidParameter("unknown op '" + op + "' (expected csm, mht or genus)");
  }
  return r;
}

Report run_verify(const Command& c, Report r) {
  const std::string& suite = require(c, "suite");
  SuiteOptions options;
  if (has(c, "order")) options.order = to_int("order", c.args.at("order"));
  if (options.order < 1) throw InvalidParameter("--order must be at least 1");
  r.inputs = {{"suite", suite}, {"order", std::to_string(options.order)}};
  if (suite == "all") r.suites = run_all(options);
  else r.suites = {run_suite(suite, options)};
  return r;
}

Report run_describe(const Command& c, Report r) {
  const SpacePtr s = space_of(c);
  r.inputs = {{"space", input_space(c)}};
  const GradedRing& ring = *s->ring();
  std::string basis;
  std::vector<std::pair<Rational, std::string>> integral_terms;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    basis += (i ? ", " : "") + ring.label(i);
    if (!ring.integral(i).is_zero()) integral_terms.emplace_back(ring.integral(i), "int " + ring.label(i));
  }
  r.results = {{"key", s->key()},
               {"dim", std::to_string(s->dim())},
               {"basis", basis},
               {"tangent chern", render(s->tangent_chern())},
               {"hyperplane", render(s->hyperplane())}};
  std::string integrals;
  for (const auto& [q, label] : integral_terms) integrals += (integrals.empty() ? "" : ", ") + label + " = " + q.to_string();
  r.results.emplace_back("integrals", integrals);
  if (const auto& log = s->log_structure()) {
    r.results.emplace_back("log cotangent", "rank " + std::to_string(log->log_cotangent.rank) + ", c = " +
                                                render(log->log_cotangent.total_chern));
    r.results.emplace_back("boundary components", std::to_string(log->divisors.size()));
  }
  return r;
}

}  // namespace

Report execute(const Command& command) {
  Report r;
  r.command = command.name;
  if (command.name == "epoly") return run_epoly(command, std::move(r));
  if (command.name == "genus") return run_genus(command, std::move(r));
  if (command.name == "classes") return run_classes(command, std::move(r));
  if (command.name == "arrangement") return run_arrangement(command, std::move(r));
  if (command.name == "verify") return run_verify(command, std::move(r));
  if (command.name == "describe") return run_describe(command, std::move(r));
  throw InvalidParameter("unknown command '" + command.name + "'");
}

std::string render_text(const Report& report) {
  std::string out;
  if (report.results.size() == 1) {
    out += report.results.front().second + "\n";
  } else {
    for (const auto& [name, value] : report.results) out += name + ": " + value + "\n";
  }
  for (const auto& s : report.suites) {
    if (s.pass()) {
      out += s.name + ": PASS (" + std::to_string(s.checks.size()) + " checks)\n";
      continue;
    }
    out += s.name + ": FAIL (" + std::to_string(s.failures()) + " of " + std::to_string(s.checks.size()) +
           " checks failed)\n";
    for (const auto& c : s.checks)
      if (!c.pass) out += "  " + c.identity + "\n    " + c.detail + "\n";
  }
  return out;
}

std::string render_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["command"] = report.command;
  doc["inputs"] = json::object();
  for (const auto& [k, v] : report.inputs) doc["inputs"][k] = v;
  doc["results"] = json::object();
  for (const auto& [k, v] : report.results) doc["results"][k] = v;
  doc["suites"] = json::array();
  for (const auto& s : report.suites) {
    json suite;
    suite["name"] = s.name;
    suite["pass"] = s.pass();
    suite["checks"] = json::array();
    for (const auto& c : s.checks) {
      json check;
      check["identity"] = c.identity;
      check["pass"] = c.pass;
      if (!c.pass) check["detail"] = c.detail;
      suite["checks"].push_back(std::move(check));
    }
    doc["suites"].push_back(std::move(suite));
  }
  return doc.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* order_env) {
  CLI::App app{"Exact Hodge genera, characteristic classes and their functorial identities", "hirz"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::map<std::string, std::string> values;
  std::vector<std::pair<CLI::App*, std::vector<std::pair<std::string, CLI::Option*>>>> commands;
  auto option = [&](CLI::App* sub, const std::string& key, const std::string& flag, const std::string& help) {
    CLI::Option* o = sub->add_option(flag, values[sub->get_name() + "/" + key], help);
    for (auto& [app_ptr, opts] : commands)
      if (app_ptr == sub) opts.emplace_back(key, o);
    return o;
  };
  auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back({sub, {}});
    return sub;
  };

  CLI::App* epoly = command("epoly", "E-polynomial of a class in the Grothendieck ring");
  option(epoly, "expr", "expr", "Class expression, e.g. \"P2 - 2 P1 + pt\"")->required();

  CLI::App* genus = command("genus", "chi_y genus of a class or a space");
  auto* motivic = option(genus, "motivic", "--motivic", "Class expression (compactly supported genus)");
  auto* gspace = option(genus, "space", "--space", "Space description");
  auto* gfile = option(genus, "space-file", "--space-file", "Custom space document");
  motivic->excludes(gspace)->excludes(gfile);
  gspace->excludes(gfile);

  CLI::App* classes = command("classes", "Characteristic class of the tangent bundle");
  auto* cspace = option(classes, "space", "--space", "Space description");
  auto* cfile = option(classes, "space-file", "--space-file", "Custom space document");
  cspace->excludes(cfile);
  option(classes, "series", "--series", "chern, todd, l or ty")
      ->required()
      ->check(CLI::IsMember({"chern", "todd", "l", "ty"}));

  CLI::App* arrangement = command("arrangement", "Complement of k general hyperplanes in P^n");
  option(arrangement, "n", "--n", "Ambient dimension")->required();
  option(arrangement, "k", "--k", "Number of hyperplanes")->required();
  option(arrangement, "op", "--op", "csm, mht or genus")->required()->check(CLI::IsMember({"csm", "mht", "genus"}));

  CLI::App* verify = command("verify", "Run verification suites");
  option(verify, "suite", "--suite", "Suite name or 'all'")->required();
  option(verify, "order", "--order", "Series truncation order (default: HIRZ_ORDER or 8)");

  CLI::App* describe = command("describe", "Show a space model");
  auto* dspace = option(describe, "space", "--space", "Space description");
  auto* dfile = option(describe, "space-file", "--space-file", "Custom space document");
  dspace->excludes(dfile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Command cmd;
  for (const auto& [sub, opts] : commands) {
    if (!sub->parsed()) continue;
    cmd.name = sub->get_name();
    for (const auto& [key, o] : opts)
      if (o->count() > 0) cmd.args[key] = values[cmd.name + "/" + key];
  }
  if (cmd.name == "verify" && !cmd.args.count("order") && order_env != nullptr && *order_env != '\0')
    cmd.args["order"] = order_env;
  if ((cmd.name == "classes" || cmd.name == "describe") && !cmd.args.count("space") && !cmd.args.count("space-file")) {
    err << "error: " << cmd.name << " needs --space or --space-file\n";
    return 2;
  }
  if (cmd.name == "genus" && cmd.args.empty()) {
    err << "error: genus needs --motivic, --space or --space-file\n";
    return 2;
  }

  try {
    const Report report = execute(cmd);
    out << (format == "json" ? render_json(report) : render_text(report));
    return report.failed() ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << cmd.name << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hirz
