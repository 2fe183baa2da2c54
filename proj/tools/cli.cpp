#include "cli.hpp"

#include "cobsec/class_expression.hpp"
#include "cobsec/cobordism_algebra.hpp"
#include "cobsec/errors.hpp"
#include "cobsec/json.hpp"
#include "cobsec/obstruction.hpp"
#include "cobsec/spectra_ranks.hpp"
#include "cobsec/symmetric_functions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace cobsec::cli {

namespace {

struct JobConfig {
  std::string format = "text";
  int max_degree = kDefaultMaxDegree;
  std::string job_file;

  std::string omega;
  std::string class_expr;
  std::string spectrum = "MTU";
  std::string q_range;
  int d = 0;
  std::optional<int> r;

  bool json() const { return format == "json"; }
};

void guard(const JobConfig& cfg, int d) {
  if (d > cfg.max_degree) {
    throw ResourceGuardError("degree " + std::to_string(d) + " exceeds the degree guard " +
                             std::to_string(cfg.max_degree) + " (raise it with --max-degree)");
  }
}

int require_r(const JobConfig& cfg) {
  if (!cfg.r) throw PreconditionError("--r is required");
  return *cfg.r;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int q = std::stoi(text);
      return {q, q};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw PreconditionError("malformed degree range '" + text + "' (expected a..b)");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_s_poly(const JobConfig& cfg, std::ostream& out) {
  const Partition omega = parse_partition(cfg.omega);
  if (omega.empty()) throw PreconditionError("the empty partition has no s-polynomial");
  guard(cfg, omega.weight());
  const auto p = s_polynomial(omega);
  if (cfg.json()) {
    out << Json{{"omega", to_string(omega)}, {"d", p.degree()}, {"polynomial", to_string(p)}, {"terms", to_json(p)}}.dump()
        << "\n";
  } else {
    out << to_string(p) << "\n";
  }
  return kOk;
}

int cmd_obstruct(const JobConfig& cfg, std::ostream& out) {
  const auto x = parse_class(cfg.class_expr);
  guard(cfg, x.degree());
  const auto report = gamma_rational(x, require_r(cfg), cfg.max_degree);
  if (cfg.json()) {
    out << to_json(report).dump() << "\n";
  } else {
    out << "class: " << to_string(x) << "\n";
    out << "d=" << report.degree << " r=" << report.sections << "\n";
    for (const auto& e : report.entries) out << "s" << to_string(e.omega) << " = " << to_string(e.value) << "\n";
    out << "vanishes: " << (report.vanishes ? "true" : "false") << "\n";
    if (report.witness) out << "witness: " << to_string(report.witness->omega) << " = " << to_string(report.witness->value) << "\n";
  }
  return report.vanishes ? kOk : kNegative;
}

std::string describe(const GeneratorCheck& check) {
  std::ostringstream s;
  s << to_string(check.verdict) << " (s_" << check.degree << " = " << check.s_top;
  if (check.prime_powers.empty()) {
    s << "; d+1 is not a prime power, requires s_d = +-1)";
  } else {
    for (const auto& pp : check.prime_powers) {
      s << "; d+1 = " << pp.prime << "^" << pp.exponent << ", requires s_d = +-" << pp.prime;
    }
    s << (check.ambiguous ? "; ambiguous)" : ")");
  }
  return s.str();
}

int cmd_generator(const JobConfig& cfg, std::ostream& out) {
  guard(cfg, cfg.d);
  const auto gen = construct_section_generator(cfg.d, require_r(cfg), cfg.max_degree);
  const bool rational = is_rational_generator(gen.cls, cfg.max_degree);
  const auto integral = integral_generator_check(gen.cls, cfg.max_degree);
  if (cfg.json()) {
    out << Json{{"d", cfg.d},
                {"r", *cfg.r},
                {"class", to_json(gen.cls)},
                {"c", integer_json(gen.clearing_constant)},
                {"s_coordinates", to_json(s_coordinates(gen.cls, cfg.max_degree))},
                {"rational_generator", rational},
                {"integral_check", to_json(integral)}}
               .dump()
        << "\n";
  } else {
    out << to_string(gen.cls) << " (c=" << gen.clearing_constant << ")\n";
    out << "rational generator: " << yes_no(rational) << "\n";
    out << "integral check: " << describe(integral) << "\n";
  }
  return kOk;
}

Spectrum parse_spectrum(const std::string& name) {
  if (name == "MTU") return Spectrum::mtu;
  if (name == "MTUrel") return Spectrum::mtu_relative;
  if (name == "MTUbar") return Spectrum::mtu_bar;
  throw PreconditionError("unknown spectrum '" + name + "' (MTU, MTUrel, MTUbar)");
}

int cmd_ranks(const JobConfig& cfg, std::ostream& out) {
  guard(cfg, cfg.d);
  const Spectrum s = parse_spectrum(cfg.spectrum);
  const int r = s == Spectrum::mtu_relative ? require_r(cfg) : cfg.r.value_or(0);
  const auto [q_min, q_max] = cfg.q_range.empty() ? std::pair{0, cfg.d} : parse_range(cfg.q_range);
  const auto table = rank_table(s, cfg.d, r, q_min, q_max);
  if (cfg.json()) {
    out << to_json(table).dump() << "\n";
    return kOk;
  }
  out << to_string(s) << "(" << cfg.d;
  if (s == Spectrum::mtu_relative) out << "," << r;
  out << ") ranks of H^{2q}, q=" << q_min << ".." << q_max << ": ";
  for (std::size_t i = 0; i < table.ranks.size(); ++i) out << (i ? "," : "") << table.ranks[i].second;
  out << "\n";
  return kOk;
}

int cmd_chern(const JobConfig& cfg, std::ostream& out) {
  const auto x = parse_class(cfg.class_expr);
  guard(cfg, x.degree());
  const auto coords = s_coordinates(x, cfg.max_degree);
  const Rational chi = coords.at(Partition::ones(x.degree()));
  const bool rational = coords.at(Partition{x.degree()}) != 0;
  if (cfg.json()) {
    out << Json{{"class", to_json(x)}, {"s_coordinates", to_json(coords)}, {"chi", to_string(chi)}, {"rational_generator", rational}}
               .dump()
        << "\n";
  } else {
    out << "class: " << to_string(x) << "\n";
    for (const auto& [omega, value] : coords) out << "s" << to_string(omega) << " = " << to_string(value) << "\n";
    out << "chi = " << to_string(chi) << "\n";
    out << "rational generator: " << yes_no(rational) << "\n";
  }
  return kOk;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  guard(cfg, cfg.d);
  const int r = cfg.r.value_or(1);
  const auto stong = verify_stong(cfg.d, cfg.max_degree);
  const auto split = splitting_check(cfg.d, r, cfg.max_degree);
  bool stable = true;
  for (int k = 0; k <= 4 && r >= 1; ++k) stable = stable && stabilization_check(cfg.d, r, k, cfg.d);
  const bool ok = stong.is_basis && split.consistent && stable;
  if (cfg.json()) {
    out << Json{{"d", cfg.d},
                {"r", r},
                {"stong", {{"determinant", integer_json(stong.determinant)}, {"ok", stong.is_basis}}},
                {"splitting", to_json(split)},
                {"stabilization", stable},
                {"ok", ok}}
               .dump()
        << "\n";
  } else {
    auto flag = [](bool b) { return b ? "OK" : "FAIL"; };
    out << "Stong det=" << stong.determinant << " " << flag(stong.is_basis) << "; splitting r=" << r << ": i=" << split.i
        << " j=" << split.j << " p=" << split.p << " " << flag(split.consistent) << "; stabilization " << flag(stable)
        << "\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_kernel(const JobConfig& cfg, std::ostream& out) {
  guard(cfg, cfg.d);
  const auto basis = kernel_basis(cfg.d, require_r(cfg), cfg.max_degree);
  if (cfg.json()) {
    Json classes = Json::array();
    for (const auto& x : basis) classes.push_back(to_json(x));
    out << Json{{"d", cfg.d}, {"r", *cfg.r}, {"dimension", basis.size()}, {"basis", std::move(classes)}}.dump() << "\n";
  } else {
    out << "kernel d=" << cfg.d << " r=" << *cfg.r << " dimension " << basis.size() << "\n";
    for (const auto& x : basis) out << to_string(x) << "\n";
  }
  return kOk;
}

// Translates a JSON job file into the equivalent argument list.
std::vector<std::string> job_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open job file '" + path + "'");
  nlohmann::json job;
  try {
    job = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed job file: ") + e.what());
  }
  if (!job.is_object() || !job.contains("command") || !job["command"].is_string()) {
    throw PreconditionError("job file needs a string field \"command\"");
  }
  std::vector<std::string> args{job["command"].get<std::string>()};
  auto value_text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const char* positional : {"omega", "class"}) {
    if (job.contains(positional)) args.push_back(value_text(job[positional]));
  }
  const std::pair<const char*, const char*> flags[] = {
      {"d", "--d"}, {"r", "--r"}, {"q", "--q"}, {"spectrum", "--spectrum"}, {"format", "--format"}, {"max_degree", "--max-degree"}};
  for (const auto& [key, flag] : flags) {
    if (job.contains(key)) {
      args.emplace_back(flag);
      args.push_back(value_text(job[key]));
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"Exact complex-cobordism computations for the complex-section obstruction", "cobsec"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", cfg.max_degree, "Degree guard")->check(CLI::PositiveNumber);
  app.add_option("--job", cfg.job_file, "Run the job described by a JSON file");

  auto* s_poly = app.add_subcommand("s-poly", "Print s_omega as a polynomial in Chern classes");
  s_poly->add_option("omega", cfg.omega, "Partition, e.g. \"[2,1]\"")->required();

  auto* obstruct = app.add_subcommand("obstruct", "Rational obstruction to r complex sections");
  obstruct->add_option("class", cfg.class_expr, "Class expression, e.g. \"4*CP2 - 3*CP1^2\"")->required();
  obstruct->add_option("--r", cfg.r, "Number of sections")->required();

  auto* generator = app.add_subcommand("generator", "Integer generator admitting r sections rationally");
  generator->add_option("--d", cfg.d, "Complex dimension")->required();
  generator->add_option("--r", cfg.r, "Number of sections")->required();

  auto* ranks = app.add_subcommand("ranks", "Cohomology ranks of MTU(d), MTU(d,r), MTUbar(d)");
  ranks->add_option("--spectrum", cfg.spectrum, "MTU, MTUrel or MTUbar")->check(CLI::IsMember({"MTU", "MTUrel", "MTUbar"}));
  ranks->add_option("--d", cfg.d, "Spectrum index")->required();
  ranks->add_option("--r", cfg.r, "Sections (MTUrel only)");
  ranks->add_option("--q", cfg.q_range, "Range a..b of q (degree 2q)");

  auto* chern = app.add_subcommand("chern", "s-numbers and Euler characteristic of a class");
  chern->add_option("class", cfg.class_expr, "Class expression")->required();

  auto* verify = app.add_subcommand("verify", "Stong basis, splitting and stabilization checks");
  verify->add_option("--d", cfg.d, "Complex dimension")->required();
  verify->add_option("--r", cfg.r, "Number of sections (default 1)");

  auto* kernel = app.add_subcommand("kernel", "Basis of the classes with vanishing rational obstruction");
  kernel->add_option("--d", cfg.d, "Complex dimension")->required();
  kernel->add_option("--r", cfg.r, "Number of sections")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!cfg.job_file.empty()) {
      if (!app.get_subcommands().empty()) throw PreconditionError("--job cannot be combined with a subcommand");
      return run(job_arguments(cfg.job_file), out, err);
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kUsage;
    }
    if (cfg.max_degree != kDefaultMaxDegree) {
      err << "warning: degree guard set to " << cfg.max_degree << " (default " << kDefaultMaxDegree << ")\n";
    }
    if (cfg.d < 0) throw PreconditionError("--d must be >= 0");

    auto* sub = app.get_subcommands().front();
    if (sub == s_poly) return cmd_s_poly(cfg, out);
    if (sub == obstruct) return cmd_obstruct(cfg, out);
    if (sub == generator) return cmd_generator(cfg, out);
    if (sub == ranks) return cmd_ranks(cfg, out);
    if (sub == chern) return cmd_chern(cfg, out);
    if (sub == verify) return cmd_verify(cfg, out);
    if (sub == kernel) return cmd_kernel(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cobsec::cli
