#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "heckelab/projective.hpp"

namespace heckelab::cache {

/// Bumped whenever a normalization or ordering convention changes; it is
/// part of the key, so old files are simply never found.
inline constexpr int kConventionVersion = 1;

/// Hex FNV-1a of the matrix, the length bound and the convention version.
std::string cache_key(const CoxeterMatrix& matrix, std::optional<int> length_bound,
                      int version = kConventionVersion);

enum class Kind { KL, Projective };

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key, Kind kind);

enum class LoadStatus { Loaded, Miss, Corrupt };

struct LoadResult {
  LoadStatus status = LoadStatus::Miss;
  std::string message;
};

/// Computes any missing entries, then writes every C_x to the cache dir.
void store(const std::filesystem::path& dir, const KLBasis& kl, unsigned jobs = 1);
void store(const std::filesystem::path& dir, const ProjectiveBasis& proj, unsigned jobs = 1);

/// Seeds the memo from disk. A missing file is a Miss; a file that does not
/// parse, has the wrong key or version, or fails its checksum is Corrupt and
/// nothing is loaded.
LoadResult load(const std::filesystem::path& dir, const KLBasis& kl);
LoadResult load(const std::filesystem::path& dir, const ProjectiveBasis& proj);

}  // namespace heckelab::cache
