#include "heckelab/cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "heckelab/batch.hpp"
#include "heckelab/cli/cache.hpp"
#include "heckelab/cli/serialize.hpp"
#include "heckelab/cli/verify.hpp"
#include "heckelab/errors.hpp"

namespace heckelab::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Workspace {
  std::string label;
  std::unique_ptr<GroupContext> ctx;
  std::unique_ptr<HeckeAlgebra> algebra;
  std::unique_ptr<KLBasis> kl;
  std::unique_ptr<ProjectiveBasis> proj;
  std::optional<std::filesystem::path> cache_dir;
};

CoxeterMatrix load_matrix(const JobConfig& config, std::string& label) {
  if (config.type.empty() == config.matrix_file.empty())
    throw UsageError("exactly one of --type and --matrix-file is required");
  if (!config.type.empty()) {
    label = config.type;
    return CoxeterMatrix::from_type(config.type);
  }
  std::ifstream in(config.matrix_file);
  if (!in) throw UsageError("cannot open matrix file '" + config.matrix_file + "'");
  label = "matrix:" + std::filesystem::path(config.matrix_file).filename().string();
  return CoxeterMatrix::parse(in);
}

bool needs_finite(Command c) { return c == Command::Verify || c == Command::BasisProj; }
bool needs_projective(Command c) { return needs_finite(c); }

Workspace prepare(const JobConfig& config, std::ostream& err) {
  Workspace ws;
  CoxeterMatrix matrix = load_matrix(config, ws.label);
  BuildOptions options;
  options.length_bound = config.max_length;
  ws.ctx = std::make_unique<GroupContext>(GroupContext::build(matrix, options));
  if (needs_finite(config.command) && !ws.ctx->complete())
    throw IncompleteGroup("this command requires a finite group, but " + ws.label +
                          " was truncated at length " + std::to_string(*ws.ctx->length_bound()));

  if (!config.cache_dir.empty()) {
    ws.cache_dir = config.cache_dir;
  } else if (const char* env = std::getenv(kCacheDirEnv); env && *env) {
    ws.cache_dir = env;
  }

  ws.algebra = std::make_unique<HeckeAlgebra>(*ws.ctx);
  if (config.command == Command::Info) return ws;

  ws.kl = std::make_unique<KLBasis>(*ws.algebra);
  if (ws.cache_dir) {
    auto loaded = cache::load(*ws.cache_dir, *ws.kl);
    if (loaded.status == cache::LoadStatus::Corrupt) err << "warning: " << loaded.message << "; recomputing\n";
    if (loaded.status != cache::LoadStatus::Loaded) cache::store(*ws.cache_dir, *ws.kl, config.jobs);
  }
  compute_all_kl(*ws.kl, config.jobs);

  if (needs_projective(config.command)) {
    ws.proj = std::make_unique<ProjectiveBasis>(*ws.kl);
    if (ws.cache_dir) {
      auto loaded = cache::load(*ws.cache_dir, *ws.proj);
      if (loaded.status == cache::LoadStatus::Corrupt) err << "warning: " << loaded.message << "; recomputing\n";
      if (loaded.status != cache::LoadStatus::Loaded) cache::store(*ws.cache_dir, *ws.proj, config.jobs);
    }
    compute_all_projective(*ws.proj, config.jobs);
  }
  return ws;
}

void emit(const JobConfig& config, const std::string& data, std::ostream& out) {
  if (config.out.empty()) {
    out << data;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + config.out + "'");
  file << data;
  if (!file) throw Error("failed writing '" + config.out + "'");
}

std::string info_text(const Workspace& ws, Format format) {
  const GroupContext& ctx = *ws.ctx;
  std::optional<Word> w0;
  if (ctx.complete()) w0 = ctx.word(ctx.longest_element());
  if (format == Format::Csv) {
    std::ostringstream os;
    os << "key,value\n"
       << "group," << ws.label << '\n'
       << "rank," << ctx.rank() << '\n'
       << "engine," << ctx.engine_name() << '\n'
       << "complete," << (ctx.complete() ? "true" : "false") << '\n'
       << "order," << ctx.size() << '\n'
       << "max_length," << ctx.max_length() << '\n'
       << "longest," << (w0 ? format_word(*w0) : "") << '\n';
    return os.str();
  }
  std::vector<std::vector<int>> rows(ctx.rank());
  for (int i = 0; i < ctx.rank(); ++i)
    for (int j = 0; j < ctx.rank(); ++j) rows[i].push_back(ctx.matrix()(i, j));
  io::json doc = {{"group", ws.label},
                  {"rank", ctx.rank()},
                  {"matrix", rows},
                  {"engine", ctx.engine_name()},
                  {"complete", ctx.complete()},
                  {"order", ctx.size()},
                  {"max_length", ctx.max_length()},
                  {"length_bound", ctx.length_bound() ? io::json(*ctx.length_bound()) : io::json(nullptr)},
                  {"longest", w0 ? io::word_to_json(*w0) : io::json(nullptr)}};
  return doc.dump(2) + "\n";
}

std::string table_text(const JobConfig& config, const Workspace& ws, io::TableKind kind,
                       const std::vector<io::TableRow>& rows) {
  return config.format == Format::Json ? io::table_to_json(kind, ws.label, rows) : io::table_to_csv(kind, rows);
}

int run_verify(const JobConfig& config, const Workspace& ws, std::ostream& out, std::ostream& err) {
  verify::Options options{ws.label, config.seed, config.adjointness_samples};
  std::vector<verify::TheoremResult> results;
  for (const auto& name : verify::resolve(config.theorems)) results.push_back(verify::run(name, *ws.proj, options));

  std::ostream& summary = config.out.empty() ? err : out;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    summary << (r.passed() ? "PASS " : "FAIL ") << r.theorem << ' ' << (r.checked - std::min(r.checked, r.failures.size()))
            << '/' << r.checked << " (" << ws.label << ")\n";
    for (const auto& f : r.failures) summary << "  counterexample: " << f << '\n';
  }
  std::string report = config.format == Format::Json ? verify::report_json(results, *ws.ctx, ws.label).dump(2) + "\n"
                                                      : verify::report_csv(results);
  emit(config, report, out);
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::Verify) verify::resolve(config.theorems);
    if (config.jobs == 0) throw UsageError("--jobs must be at least 1");
    Workspace ws = prepare(config, err);
    switch (config.command) {
      case Command::Info:
        emit(config, info_text(ws, config.format), out);
        return kExitOk;
      case Command::BasisKL:
        emit(config, table_text(config, ws, io::TableKind::KL, io::kl_table(*ws.kl)), out);
        return kExitOk;
      case Command::MuTable:
        emit(config, table_text(config, ws, io::TableKind::Mu, io::mu_table(*ws.kl)), out);
        return kExitOk;
      case Command::BasisProj:
        emit(config, table_text(config, ws, io::TableKind::Projective, io::projective_table(*ws.proj)), out);
        return kExitOk;
      case Command::Verify:
        return run_verify(config, ws, out, err);
    }
  } catch (const InvalidMatrix& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnboundedGroup& e) {
    err << "error: " << e.what() << "; pass --max-length\n";
  } catch (const IncompleteGroup& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  CLI::App app{"Hecke algebra bases: Kazhdan-Lusztig, projective, and their dualities"};
  app.require_subcommand(1);
  JobConfig config;
  std::string format = "json";
  std::string theorems = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", config.type, "Type shorthand: A:n, B:n, D:n, I2:m, H:3, H:4, F:4");
    sub->add_option("--matrix-file", config.matrix_file, "Coxeter matrix file (rank, then rows; 0 = infinity)");
    sub->add_option("--max-length", config.max_length, "Length bound for truncated (infinite) groups");
    sub->add_option("--out", config.out, "Output file (default: stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cache-dir", config.cache_dir, std::string("Cache directory (default: $") + kCacheDirEnv + ")");
    sub->add_option("--jobs", config.jobs, "Worker threads");
  };

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {{"basis-kl", "Table of h_{y,x}", Command::BasisKL},
                      {"basis-proj", "Table of projective basis coordinates", Command::BasisProj},
                      {"mu-table", "Table of nonzero mu(y,x)", Command::MuTable},
                      {"verify", "Check the duality theorems", Command::Verify},
                      {"info", "Summary of the Coxeter group", Command::Info}};
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    if (s.command == Command::Verify) {
      sub->add_option("--theorems", theorems, "Comma-separated list, or 'all'");
      sub->add_option("--seed", config.seed, "Seed for the randomized adjointness check");
      sub->add_option("--samples", config.adjointness_samples, "Random pairs for the adjointness check");
    }
    sub->callback([&config, cmd = s.command] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.format = format == "csv" ? Format::Csv : Format::Json;
  config.theorems.clear();
  std::stringstream ss(theorems);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) config.theorems.push_back(item);
  return run(config, std::cout, std::cerr);
}

}  // namespace heckelab::cli
