#include "incidence_cli/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "incidence/bounds/fit.hpp"
#include "incidence/constructions/generators.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/curve_io.hpp"
#include "incidence/incidence/report.hpp"
#include "incidence/partition/partition.hpp"

namespace incidence::cli {

namespace {

const std::vector<std::string> kCommands = {"generate", "partition", "count", "audit",
                                            "bounds",   "rich",      "fit"};

constexpr int kMaxQIndex = 9;

template <typename T>
T parse_unsigned(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty())
    throw InputError("bad value '" + value + "' for " + key);
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty())
    throw InputError("bad value '" + value + "' for " + key);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw InputError("cannot write " + config.out);
  file << text;
}

std::string format_or(const RunConfig& config, const char* fallback) {
  const std::string f = config.format.empty() ? fallback : config.format;
  if (f != "csv" && f != "json") throw InputError("format must be csv or json");
  return f;
}

void require(const std::string& value, const char* key) {
  if (value.empty()) throw InputError(std::string("missing ") + key);
}

BoundSpec bound_spec(const RunConfig& c) {
  BoundSpec spec;
  spec.m = c.m;
  spec.n = c.n;
  spec.d = c.d;
  spec.k = c.k;
  spec.eps = c.eps;
  spec.q = c.q;
  return spec;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(c.kind);
  spec.size = c.size;
  spec.seed = c.seed;
  spec.dimension = c.dimension;
  require(c.out, "out (output directory)");
  const GeneratedInstance inst = generate(spec);
  std::filesystem::create_directories(c.out);
  const std::filesystem::path dir(c.out);
  {
    std::ofstream f(dir / "points.txt", std::ios::binary);
    write_points(f, inst.points);
  }
  {
    std::ofstream f(dir / "curves.txt", std::ios::binary);
    write_curves(f, inst.family.curves);
  }
  {
    std::ofstream f(dir / "manifest.txt", std::ios::binary);
    f << inst.manifest() << '\n';
  }
  out << inst.manifest() << '\n';
  return kOk;
}

int cmd_partition(const RunConfig& c, std::ostream& out) {
  require(c.points, "points");
  const auto points = load_points(c.points);
  const Partition part = build_partition(points, c.r, {c.delta, c.seed, 64});
  if (format_or(c, "json") == "json") {
    emit(c, out, partition_to_json(part) + "\n");
    return kOk;
  }
  std::vector<std::string> cell(points.size(), "zero");
  for (const auto& [sv, rec] : part.cells)
    for (std::size_t id : rec.point_ids) cell[id] = sv;
  std::ostringstream csv;
  csv << "point_id,cell\n";
  for (std::size_t i = 0; i < cell.size(); ++i) csv << i << ',' << cell[i] << '\n';
  emit(c, out, csv.str());
  return kOk;
}

CountOptions count_options(const RunConfig& c) {
  CountOptions o;
  o.r = c.r;
  o.depth_cap = c.depth_cap;
  o.delta = c.delta;
  o.seed = c.seed;
  o.k = c.k;
  o.threads = c.threads;
  return o;
}

int cmd_count(const RunConfig& c, std::ostream& out) {
  require(c.points, "points");
  require(c.curves, "curves");
  const auto points = load_points(c.points);
  const auto curves = load_curves(c.curves);
  CountSummary summary;
  summary.m = points.size();
  summary.n = curves.size();
  summary.d = !points.empty() ? points.front().dimension()
              : !curves.empty() ? curves.front().dimension()
                                : 0;
  CountOptions options = count_options(c);
  summary.oracle = count_brute(points, curves, options);
  options.collect_pairs = false;
  summary.partitioned = count_partitioned(points, curves, options);
  if (format_or(c, "json") == "json") {
    emit(c, out, count_summary_json(summary));
  } else {
    if (!summary.oracle.pairs) throw InputError("too many incident pairs for CSV output");
    emit(c, out, pairs_csv(*summary.oracle.pairs));
  }
  return kOk;
}

int cmd_audit(const RunConfig& c, std::ostream& out) {
  require(c.points, "points");
  require(c.curves, "curves");
  const auto points = load_points(c.points);
  CurveFamily family;
  family.curves = load_curves(c.curves);
  family.k = c.k;
  family.s = c.s;
  family.dimension = !points.empty() ? points.front().dimension() : 0;
  family.name = c.curves;
  const AuditReport dof = audit_dof(family, points, c.budget, c.seed);
  const KstResult kst = kst_check(points, family.curves, c.k, c.s, c.budget);
  std::vector<Surface> surfaces;
  if (c.surfaces == "hyperplanes" || c.surfaces == "both")
    surfaces = hyperplanes_through_samples(points, c.max_surfaces, c.seed);
  if (c.surfaces == "spheres" || c.surfaces == "both") {
    auto spheres = spheres_through_samples(points, c.max_surfaces, c.seed);
    surfaces.insert(surfaces.end(), spheres.begin(), spheres.end());
  }
  const AuditReport containment = audit_containment(family.curves, surfaces);
  format_or(c, "json");
  emit(c, out, audit_bundle_json(dof, kst, containment));
  return kOk;
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
  const BoundResult res = evaluate(parse_evaluator(c.evaluator), bound_spec(c));
  emit(c, out, format_or(c, "json") == "json" ? bound_json(res) : bound_csv(res));
  return kOk;
}

int cmd_rich(const RunConfig& c, std::ostream& out) {
  require(c.points, "points");
  require(c.curves, "curves");
  const auto points = load_points(c.points);
  const auto curves = load_curves(c.curves);
  const RichPointSet rich = rich_points(points, curves, c.threshold, c.threads);
  if (format_or(c, "json") == "json") {
    emit(c, out, rich_json(rich));
  } else {
    std::ostringstream csv;
    csv << "point_id,curves\n";
    for (const auto& [id, count] : rich.points) csv << id << ',' << count << '\n';
    emit(c, out, csv.str());
  }
  return kOk;
}

// Sample lines: `m n count [qJ=value ...]`.
std::vector<FitSample> read_samples(const RunConfig& c) {
  std::vector<FitSample> samples;
  std::istringstream in(read_file(c.samples));
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 3) throw InputError("sample line needs m n count: " + line);
    FitSample s;
    s.spec = bound_spec(c);
    s.spec.m = parse_unsigned<std::uint64_t>("m", tok[0]);
    s.spec.n = parse_unsigned<std::uint64_t>("n", tok[1]);
    s.measured = static_cast<double>(parse_unsigned<std::uint64_t>("count", tok[2]));
    for (std::size_t i = 3; i < tok.size(); ++i) {
      const auto eq = tok[i].find('=');
      if (tok[i].size() < 2 || tok[i][0] != 'q' || eq == std::string::npos)
        throw InputError("bad sample field " + tok[i]);
      s.spec.q[parse_int("q index", tok[i].substr(1, eq - 1))] =
          parse_unsigned<std::uint64_t>(tok[i], tok[i].substr(eq + 1));
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

int cmd_fit(const RunConfig& c, std::ostream& out) {
  require(c.samples, "samples");
  const auto samples = read_samples(c);
  const FittedConstants fit = fit_constants(samples, parse_evaluator(c.evaluator));
  format_or(c, "json");
  emit(c, out, fit_json(fit));
  return kOk;
}

}  // namespace

void set_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "command") {
    if (std::find(kCommands.begin(), kCommands.end(), value) == kCommands.end())
      throw InputError("unknown command '" + value + "'");
    c.command = value;
  } else if (key == "points") c.points = value;
  else if (key == "curves") c.curves = value;
  else if (key == "samples") c.samples = value;
  else if (key == "out") c.out = value;
  else if (key == "format") {
    if (!value.empty() && value != "csv" && value != "json")
      throw InputError("format must be csv or json");
    c.format = value;
  } else if (key == "r") c.r = parse_unsigned<unsigned>(key, value);
  else if (key == "delta") c.delta = parse_rational(value);
  else if (key == "depth_cap") c.depth_cap = parse_int(key, value);
  else if (key == "seed") c.seed = parse_unsigned<std::uint64_t>(key, value);
  else if (key == "eps") c.eps = parse_rational(value);
  else if (key == "threads") c.threads = parse_unsigned<unsigned>(key, value);
  else if (key == "evaluator") c.evaluator = value;
  else if (key == "m") c.m = parse_unsigned<std::uint64_t>(key, value);
  else if (key == "n") c.n = parse_unsigned<std::uint64_t>(key, value);
  else if (key == "d") c.d = parse_int(key, value);
  else if (key == "k") c.k = parse_int(key, value);
  else if (key == "s") c.s = parse_int(key, value);
  else if (key == "kind") c.kind = value;
  else if (key == "N") c.size = parse_int(key, value);
  else if (key == "dimension") c.dimension = parse_unsigned<std::size_t>(key, value);
  else if (key == "threshold") c.threshold = parse_unsigned<unsigned>(key, value);
  else if (key == "budget") c.budget = parse_unsigned<std::size_t>(key, value);
  else if (key == "surfaces") {
    if (value != "none" && value != "hyperplanes" && value != "spheres" && value != "both")
      throw InputError("surfaces must be none, hyperplanes, spheres or both");
    c.surfaces = value;
  } else if (key == "max_surfaces") c.max_surfaces = parse_unsigned<std::size_t>(key, value);
  else if (key.size() >= 2 && key[0] == 'q' &&
           key.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int j = parse_int(key, key.substr(1));
    if (j < 2 || j > kMaxQIndex) throw InputError("q index out of range in " + key);
    c.q[j] = parse_unsigned<std::uint64_t>(key, value);
  } else {
    throw InputError("unknown config key '" + key + "'");
  }
}

std::string config_to_text(const RunConfig& c) {
  std::ostringstream out;
  auto kv = [&](const char* key, const auto& value) { out << key << " = " << value << '\n'; };
  kv("command", c.command);
  kv("points", c.points);
  kv("curves", c.curves);
  kv("samples", c.samples);
  kv("out", c.out);
  kv("format", c.format);
  kv("r", c.r);
  kv("delta", to_string(c.delta));
  kv("depth_cap", c.depth_cap);
  kv("seed", c.seed);
  kv("eps", to_string(c.eps));
  kv("threads", c.threads);
  kv("evaluator", c.evaluator);
  kv("m", c.m);
  kv("n", c.n);
  kv("d", c.d);
  kv("k", c.k);
  kv("s", c.s);
  for (const auto& [j, v] : c.q) out << 'q' << j << " = " << v << '\n';
  kv("kind", c.kind);
  kv("N", c.size);
  kv("dimension", c.dimension);
  kv("threshold", c.threshold);
  kv("budget", c.budget);
  kv("surfaces", c.surfaces);
  kv("max_surfaces", c.max_surfaces);
  return out.str();
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    set_key(c, trim(std::string_view(line).substr(0, eq)),
            trim(std::string_view(line).substr(eq + 1)));
  }
  return c;
}

RunConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "generate") return cmd_generate(config, out);
    if (config.command == "partition") return cmd_partition(config, out);
    if (config.command == "count") return cmd_count(config, out);
    if (config.command == "audit") return cmd_audit(config, out);
    if (config.command == "bounds") return cmd_bounds(config, out);
    if (config.command == "rich") return cmd_rich(config, out);
    if (config.command == "fit") return cmd_fit(config, out);
    throw InputError("unknown command '" + config.command + "'");
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PartitionFailure& e) {
    err << "partition failure: " << e.what() << '\n';
    return kPartitionFailure;
  } catch (const GenericityFailure& e) {
    err << "genericity failure: " << e.what() << '\n';
    return kGenericityFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantBreach;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact point-curve incidence workbench", "incidence"};
  std::string command, config_path;
  app.add_option("command", command, "generate|partition|count|audit|bounds|rich|fit")
      ->required();
  app.add_option("--config", config_path, "key = value config file");

  // Flag name -> config key; every flag stores its raw text.
  const std::vector<std::pair<std::string, std::string>> flags = {
      {"--points", "points"},       {"--curves", "curves"},     {"--samples", "samples"},
      {"--out", "out"},             {"--format", "format"},     {"--r", "r"},
      {"--delta", "delta"},         {"--depth-cap", "depth_cap"}, {"--seed", "seed"},
      {"--eps", "eps"},             {"--threads", "threads"},   {"--evaluator", "evaluator"},
      {"--m", "m"},                 {"--n", "n"},               {"--d", "d"},
      {"--k", "k"},                 {"--s", "s"},               {"--kind", "kind"},
      {"--N", "N"},                 {"--dimension", "dimension"}, {"--threshold", "threshold"},
      {"--budget", "budget"},       {"--surfaces", "surfaces"}, {"--max-surfaces", "max_surfaces"},
  };
  std::vector<std::pair<std::string, std::string>> all = flags;
  for (int j = 2; j <= kMaxQIndex; ++j)
    all.emplace_back("--q" + std::to_string(j), "q" + std::to_string(j));
  std::vector<std::string> values(all.size());
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < all.size(); ++i)
    options.push_back(app.add_option(all[i].first, values[i]));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    set_key(config, "command", command);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (options[i]->count() > 0) set_key(config, all[i].second, values[i]);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return run(config, out, err);
}

}  // namespace incidence::cli
