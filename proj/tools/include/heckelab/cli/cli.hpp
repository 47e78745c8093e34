#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heckelab::cli {

enum class Command { BasisKL, BasisProj, MuTable, Verify, Info };
enum class Format { Json, Csv };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted when --cache-dir is not given.
inline constexpr const char* kCacheDirEnv = "HECKELAB_CACHE_DIR";

struct JobConfig {
  Command command = Command::Info;
  std::string type;         // shorthand such as "B:3"
  std::string matrix_file;  // alternative to `type`
  std::optional<int> max_length;
  std::vector<std::string> theorems{"all"};
  std::string out;  // empty: stdout
  Format format = Format::Json;
  std::string cache_dir;  // empty: $HECKELAB_CACHE_DIR, else no cache
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t adjointness_samples = 200;
};

/// Executes one job. Data goes to --out (or `out` when no file is given);
/// diagnostics go to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a JobConfig and runs it.
int main(int argc, char** argv);

}  // namespace heckelab::cli
