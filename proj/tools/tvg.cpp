// tvg: command-line front end.
//
// Exit codes: 0 success, 1 runtime failure, 2 malformed input or usage,
// 3 partition cap exceeded, 4 no path found.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tvg/config_io.hpp"
#include "tvg/generators.hpp"
#include "tvg/partition_graph.hpp"
#include "tvg/paths.hpp"
#include "tvg/rng.hpp"
#include "tvg/sarkaria.hpp"
#include "tvg/tverberg_graph.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tvg;

namespace {

enum Exit { kOk = 0, kFailure = 1, kBadInput = 2, kCapExceeded = 3, kNoPath = 4 };

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::TooManyPartitions:
      return kCapExceeded;
    case Errc::NoPathFound:
      return kNoPath;
    case Errc::DegenerateAfterRetries:
    case Errc::DivisionByZero:
      return kFailure;
    default:
      return kBadInput;
  }
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 14];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TvgError(Errc::InvalidArguments, "cannot write '" + path.string() + "'");
  out << content;
}

// Options shared by the subcommands that read a configuration.
struct Common {
  std::string input;
  std::string gen;
  std::string gen_json;
  std::size_t r = 2;
  std::string out_dir;
  std::uint64_t max_partitions = kDefaultMaxPartitions;
  unsigned threads = 1;
};

struct Run {
  std::vector<std::string> argv;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json seeds = json::array();
  std::vector<std::string> inputs;
  json generator;

  void write_manifest(const std::string& dir) const {
    if (dir.empty()) return;
    json m;
    m["format_version"] = kFormatVersion;
    m["command"] = command;
    m["argv"] = argv;
    json hashes = json::object();
    for (const auto& path : inputs) hashes[path] = sha256_file(path);
    m["input_sha256"] = hashes;
    if (!generator.is_null()) m["generator"] = generator;
    m["seeds"] = seeds;
    m["rng"] = kGeneratorId;
    m["tool_version"] = TVG_VERSION;
    m["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_file(fs::path(dir) / "manifest.json", m.dump(2) + "\n");
  }
};

void add_source_options(CLI::App* cmd, Common& c) {
  cmd->add_option("-i,--input", c.input, "point-set CSV file");
  cmd->add_option("-g,--gen", c.gen,
                  "generator: regular-polygon:N | clusters:d=D,r=R[,scale=S][,seed=K] | "
                  "random:n=N,d=D[,seed=K][,bound=B] | file:PATH");
  cmd->add_option("--gen-json", c.gen_json, "generator stanza as a JSON file");
}

void add_run_options(CLI::App* cmd, Common& c) {
  cmd->add_option("-o,--out", c.out_dir, "output directory (created if missing)");
  cmd->add_option("--max-partitions", c.max_partitions, "enumeration cap (default 5000000, env TVG_MAX_PARTITIONS)");
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 1024u));
}

AnyConfig load_config(const Common& c, Run& run) {
  const int sources = !c.input.empty() + !c.gen.empty() + !c.gen_json.empty();
  if (sources != 1) throw TvgError(Errc::InvalidArguments, "give exactly one of --input, --gen, --gen-json");
  if (!c.input.empty()) {
    run.inputs.push_back(c.input);
    return read_config_file(c.input);
  }
  GeneratorSpec spec;
  if (!c.gen.empty()) {
    spec = parse_generator_spec(c.gen);
  } else {
    run.inputs.push_back(c.gen_json);
    std::ifstream in(c.gen_json);
    if (!in) throw TvgError(Errc::ParseError, "cannot open '" + c.gen_json + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw TvgError(Errc::ParseError, e.what());
    }
    spec = generator_spec_from_json(j);
  }
  if (spec.kind == GeneratorSpec::Kind::FromFile) run.inputs.push_back(spec.path);
  if (spec.kind == GeneratorSpec::Kind::PerturbedClusters || spec.kind == GeneratorSpec::Kind::RandomUniform) {
    run.seeds.push_back(spec.seed);
  }
  run.generator = generator_spec_to_json(spec);
  return generate(spec);
}

void prepare_out(const Common& c) {
  if (!c.out_dir.empty()) fs::create_directories(c.out_dir);
}

json config_header(const AnyConfig& config) {
  json j;
  j["n"] = config.size();
  j["d"] = config.dim();
  j["scalar"] = config.scalar_name();
  return j;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Common& c, const std::vector<std::string>& formats, bool no_clique, Run& run) {
  BuildOptions opts{c.max_partitions, c.threads};
  std::optional<AnyConfig> loaded;
  try {
    loaded = load_config(c, run);
  } catch (const TvgError& e) {
    if (e.code() != Errc::EmptyInput) throw;
    json report;
    report["format_version"] = kFormatVersion;
    report["command"] = "analyze";
    report["n"] = 0;
    report["r"] = c.r;
    report["note"] = "empty input: no points, no partitions";
    std::cout << report.dump(2) << "\n";
    prepare_out(c);
    if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / "stats.json", report.dump(2) + "\n");
    run.write_manifest(c.out_dir);
    return kOk;
  }
  const AnyConfig& config = *loaded;
  std::vector<ExportFormat> exports;
  for (const auto& f : formats) exports.push_back(parse_export_format(f));
  prepare_out(c);

  json report;
  report["format_version"] = kFormatVersion;
  report["command"] = "analyze";
  report.update(config_header(config));
  report["r"] = c.r;
  if (c.r < 2 || config.size() < c.r) {
    report["note"] = "fewer points than parts: the graph is empty";
    report["stats"] = stats_to_json(GraphStats{});
    std::cout << report.dump(2) << "\n";
    if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / "stats.json", report.dump(2) + "\n");
    run.write_manifest(c.out_dir);
    return kOk;
  }
  std::visit(
      [&](const auto& cfg) {
        const auto g = build_graph(cfg, c.r, opts);
        StatsOptions so;
        so.clique = !no_clique;
        const GraphStats stats = graph_stats(g.graph, so);
        const std::size_t n = cfg.size();
        const std::size_t tv = tverberg_number(cfg.dim(), c.r);
        report["tverberg_number"] = tv;
        report["degree_bounds"] = {{"lower", n + 1 >= tv ? (n + 1 - tv) * (c.r - 1) : 0}, {"upper", n * (c.r - 1)}};
        report["stats"] = stats_to_json(stats);
        if (!c.out_dir.empty()) {
          for (auto f : exports) {
            const char* ext = f == ExportFormat::Dot ? "dot" : f == ExportFormat::Json ? "json" : "csv";
            write_file(fs::path(c.out_dir) / (std::string("graph.") + ext), export_tverberg_graph(g, f, &stats));
          }
        }
      },
      config.config);
  std::cout << report.dump(2) << "\n";
  if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / "stats.json", report.dump(2) + "\n");
  run.write_manifest(c.out_dir);
  return kOk;
}

int cmd_tables(const std::string& out_dir, bool verify, Run& run) {
  json doc;
  doc["format_version"] = kFormatVersion;
  json vertices = json::object(), edges = json::object();
  bool all_ok = true;
  std::ostringstream text;
  text << "Vertices |V(G[n,r])| = S(n,r)\n" << std::setw(4) << "r\\n";
  for (std::size_t n = 5; n <= 12; ++n) text << std::setw(12) << n;
  text << "\n";
  for (std::size_t r = 2; r <= 5; ++r) {
    text << std::setw(4) << r;
    for (std::size_t n = 5; n <= 12; ++n) {
      const Integer v = stirling2(n, r);
      vertices[std::to_string(r)][std::to_string(n)] = v.get_str();
      text << std::setw(12) << v.get_str();
    }
    text << "\n";
  }
  text << "\nEdges |E(G[n,r])|\n" << std::setw(4) << "r\\n";
  for (std::size_t n = 5; n <= 12; ++n) text << std::setw(12) << n;
  text << "\n";
  json flagged = json::array();
  for (std::size_t r = 2; r <= 5; ++r) {
    text << std::setw(4) << r;
    for (std::size_t n = 5; n <= 12; ++n) {
      const EdgeCount e = abstract_edge_count(n, r);
      edges[std::to_string(r)][std::to_string(n)] = e.value.get_str();
      if (e.hypothesis_violated) flagged.push_back({{"n", n}, {"r", r}});
      text << std::setw(12) << e.value.get_str();
    }
    text << "\n";
  }
  doc["vertices"] = vertices;
  doc["edges"] = edges;
  doc["enumerated_edge_counts"] = flagged;

  if (verify) {
    json checks = json::array();
    text << "\nBrute-force verification (n <= 9)\n";
    for (std::size_t r = 2; r <= 5; ++r) {
      for (std::size_t n = 5; n <= 9; ++n) {
        const PartitionGraph g = build_abstract_graph(n, r);
        const bool v_ok = Integer(static_cast<unsigned long>(g.vertices.size())) == stirling2(n, r);
        const bool e_ok = Integer(static_cast<unsigned long>(g.edge_count())) == abstract_edge_count(n, r).value;
        all_ok = all_ok && v_ok && e_ok;
        checks.push_back({{"n", n}, {"r", r}, {"vertices", g.vertices.size()}, {"edges", g.edge_count()},
                          {"ok", v_ok && e_ok}});
        text << "  n=" << n << " r=" << r << " vertices " << g.vertices.size() << " edges " << g.edge_count()
             << (v_ok && e_ok ? "  ok" : "  MISMATCH") << "\n";
      }
    }
    doc["verification"] = checks;
    doc["verified"] = all_ok;
  }
  std::cout << text.str();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "tables.json", doc.dump(2) + "\n");
    write_file(fs::path(out_dir) / "tables.txt", text.str());
    run.write_manifest(out_dir);
  }
  return all_ok ? kOk : kFailure;
}

int cmd_census(const Common& c, bool experimental, Run& run) {
  if (c.r != 3 && !experimental) {
    throw TvgError(Errc::InvalidArguments, "the census is defined for r = 3; pass --experimental for other r");
  }
  AnyConfig config = load_config(c, run);
  if (config.dim() != 2 && !experimental) {
    throw TvgError(Errc::WrongDimension, "the census is defined for planar configurations");
  }
  prepare_out(c);
  json report;
  report["format_version"] = kFormatVersion;
  report["command"] = "census";
  report.update(config_header(config));
  report["r"] = c.r;
  bool sum_ok = true;
  std::visit(
      [&](const auto& cfg) {
        const NerveCensus census = nerve_census(cfg, c.r, BuildOptions{c.max_partitions, c.threads});
        const Integer expected = stirling2(cfg.size(), c.r);
        sum_ok = Integer(static_cast<unsigned long>(census.total)) == expected;
        report["total"] = census.total;
        report["stirling2"] = expected.get_str();
        report["row_sum_ok"] = sum_ok;
        if (c.r == 3) {
          report["columns"] = {"no_edges", "one_edge", "two_edges", "hollow_triangle", "filled_triangle"};
          report["counts"] = census.classes;
          std::cout << "n,no_edges,one_edge,two_edges,hollow_triangle,filled_triangle,total\n" << cfg.size();
          for (auto x : census.classes) std::cout << ',' << x;
          std::cout << ',' << census.total << "\n";
        } else {
          json classes = json::array();
          for (const auto& [faces, count] : census.by_canonical_faces) {
            classes.push_back({{"faces", faces}, {"count", count}});
          }
          report["classes"] = classes;
          std::cout << report.dump(2) << "\n";
        }
      },
      config.config);
  if (!sum_ok) std::cerr << "census row sum differs from S(n,r)\n";
  if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / "census.json", report.dump(2) + "\n");
  run.write_manifest(c.out_dir);
  return sum_ok ? kOk : kFailure;
}

int cmd_path(const Common& c, const std::string& from, const std::string& to, bool best_effort, Run& run) {
  AnyConfig config = load_config(c, run);
  const Partition p = Partition::parse(from);
  const Partition q = Partition::parse(to);
  if (p.parts() != c.r || q.parts() != c.r) {
    throw TvgError(Errc::PartitionMismatch, "both partitions must have exactly r = " + std::to_string(c.r) + " parts");
  }
  prepare_out(c);
  std::ostringstream text;
  bool ok = true;
  std::visit(
      [&](const auto& cfg) {
        const auto path = c.r == 2 ? radon_path(cfg, p, q) : tverberg_path(cfg, p, q, TverbergPathOptions{best_effort});
        const PathCheck check = validate_path(cfg, path, p, q);
        ok = check.ok;
        for (std::size_t i = 0; i < path.size(); ++i) {
          text << i << '\t' << path[i].to_string() << '\t' << (check.step_ok[i] ? "ok" : "FAIL") << '\n';
        }
      },
      config.config);
  std::cout << text.str();
  if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / "path.tsv", text.str());
  run.write_manifest(c.out_dir);
  return ok ? kOk : kFailure;
}

int cmd_mc(const Common& c, std::uint64_t trials, std::optional<std::uint64_t> seed, Run& run) {
  AnyConfig config = load_config(c, run);
  if (!seed) seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  run.seeds.push_back(*seed);
  prepare_out(c);
  McResult result;
  std::visit([&](const auto& cfg) { result = mc_max_degree_probability(cfg, c.r, trials, *seed, c.threads); },
             config.config);
  const json summary = mc_summary_json(result);
  std::cout << summary.dump(2) << "\n";
  if (!c.out_dir.empty()) {
    std::ostringstream log;
    write_mc_log(log, result);
    write_file(fs::path(c.out_dir) / "mc_log.csv", log.str());
    write_file(fs::path(c.out_dir) / "mc_summary.json", summary.dump(2) + "\n");
  }
  run.write_manifest(c.out_dir);
  return kOk;
}

int cmd_generate(const Common& c, const std::string& output, Run& run) {
  AnyConfig config = load_config(c, run);
  std::ostringstream text;
  write_config(text, config);
  if (output.empty()) {
    std::cout << text.str();
  } else {
    write_file(output, text.str());
  }
  return kOk;
}

int cmd_connectivity(const Common& c, std::size_t d, std::size_t n_min, std::size_t n_max, std::size_t configs,
                     std::uint64_t seed, Run& run) {
  run.seeds.push_back(seed);
  prepare_out(c);
  std::ostringstream csv;
  csv << "n,d,r,configs,connected,min_components_failing\n";
  for (std::size_t n = n_min; n <= n_max; ++n) {
    std::size_t connected = 0;
    std::size_t worst = 0;
    for (std::size_t k = 0; k < configs; ++k) {
      const auto cfg = random_uniform(n, d, splitmix64(seed ^ (n << 32) ^ k));
      const auto g = build_graph(cfg, c.r, BuildOptions{c.max_partitions, c.threads});
      StatsOptions so{false, false};
      const auto s = graph_stats(g.graph, so);
      if (s.component_count <= 1) {
        ++connected;
      } else {
        worst = std::max(worst, s.component_count);
      }
    }
    csv << n << ',' << d << ',' << c.r << ',' << configs << ',' << connected << ',' << worst << '\n';
  }
  std::cout << csv.str();
  if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / "connectivity.csv", csv.str());
  run.write_manifest(c.out_dir);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tverberg partition graphs with exact arithmetic"};
  app.set_version_flag("--version", TVG_VERSION);
  app.require_subcommand(1);

  Run run;
  for (int i = 0; i < argc; ++i) run.argv.emplace_back(argv[i]);

  Common common;
  if (const char* env = std::getenv("TVG_MAX_PARTITIONS")) {
    try {
      common.max_partitions = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: TVG_MAX_PARTITIONS must be a nonnegative integer\n";
      return kBadInput;
    }
  }

  auto* analyze = app.add_subcommand("analyze", "build G_T[S,r] and report its statistics");
  add_source_options(analyze, common);
  add_run_options(analyze, common);
  analyze->add_option("-r", common.r, "number of parts")->required();
  std::vector<std::string> formats{"json"};
  analyze->add_option("--export", formats, "graph exports written to --out: dot, json, csv");
  bool no_clique = false;
  analyze->add_flag("--no-clique", no_clique, "skip the exact clique number");

  auto* tables = app.add_subcommand("tables", "vertex and edge counts of the abstract partition graphs");
  bool verify = false;
  tables->add_flag("--verify", verify, "cross-check by enumeration for n <= 9");
  tables->add_option("-o,--out", common.out_dir, "output directory");

  auto* census = app.add_subcommand("census", "nerve classes over all r-partitions");
  add_source_options(census, common);
  add_run_options(census, common);
  census->add_option("-r", common.r, "number of parts (default 3)");
  bool experimental = false;
  census->add_flag("--experimental", experimental, "allow r != 3 and d != 2");

  auto* path = app.add_subcommand("path", "walk between two Tverberg partitions");
  add_source_options(path, common);
  add_run_options(path, common);
  path->add_option("-r", common.r, "number of parts")->required();
  std::string from, to;
  path->add_option("--from", from, "start partition, e.g. 0,0,1,1")->required();
  path->add_option("--to", to, "end partition")->required();
  bool best_effort = false;
  path->add_flag("--best-effort", best_effort, "try the construction below 3 Tv(d,r) - 1 points");

  auto* mc = app.add_subcommand("mc", "random labelings: frequency of maximal degree");
  add_source_options(mc, common);
  add_run_options(mc, common);
  mc->add_option("-r", common.r, "number of parts")->required();
  std::uint64_t trials = 1000;
  mc->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  std::optional<std::uint64_t> seed;
  mc->add_option("--seed", seed, "seed (recorded in the manifest when omitted)");

  auto* generate_cmd = app.add_subcommand("generate", "write a generated configuration as CSV");
  add_source_options(generate_cmd, common);
  std::string output;
  generate_cmd->add_option("-o,--output", output, "output file (stdout if omitted)");

  auto* connectivity = app.add_subcommand("connectivity", "experiment: connectivity of G_T over random configs");
  add_run_options(connectivity, common);
  connectivity->add_option("-r", common.r, "number of parts")->required();
  std::size_t cd = 2, n_min = 5, n_max = 8, configs = 20;
  std::uint64_t cseed = 0;
  connectivity->add_option("-d", cd, "dimension");
  connectivity->add_option("--n-min", n_min, "smallest n");
  connectivity->add_option("--n-max", n_max, "largest n");
  connectivity->add_option("--configs", configs, "configurations per n");
  connectivity->add_option("--seed", cseed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*census && !census->count("-r")) common.r = 3;
    if (*analyze) return run.command = "analyze", cmd_analyze(common, formats, no_clique, run);
    if (*tables) return run.command = "tables", cmd_tables(common.out_dir, verify, run);
    if (*census) return run.command = "census", cmd_census(common, experimental, run);
    if (*path) return run.command = "path", cmd_path(common, from, to, best_effort, run);
    if (*mc) return run.command = "mc", cmd_mc(common, trials, seed, run);
    if (*generate_cmd) return run.command = "generate", cmd_generate(common, output, run);
    if (*connectivity) return run.command = "connectivity", cmd_connectivity(common, cd, n_min, n_max, configs, cseed, run);
  } catch (const TvgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kBadInput;
}
