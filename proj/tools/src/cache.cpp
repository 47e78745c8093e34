#include "heckelab/cli/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "heckelab/batch.hpp"
#include "heckelab/cli/serialize.hpp"
#include "heckelab/errors.hpp"

namespace heckelab::cache {

namespace {

using io::json;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

const char* kind_name(Kind kind) { return kind == Kind::KL ? "kl" : "proj"; }

json header(const GroupContext& ctx, Kind kind) {
  return {{"format", "heckelab-cache"},
          {"kind", kind_name(kind)},
          {"version", kConventionVersion},
          {"key", cache_key(ctx.matrix(), ctx.length_bound())},
          {"order", ctx.size()}};
}

void write_file(const std::filesystem::path& path, const json& doc) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << doc.dump() << '\n';
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void finish_and_write(const std::filesystem::path& dir, const GroupContext& ctx, Kind kind, json elements) {
  json doc = header(ctx, kind);
  doc["checksum"] = hex(fnv1a(elements.dump()));
  doc["elements"] = std::move(elements);
  write_file(cache_file(dir, doc["key"].get<std::string>(), kind), doc);
}

// Reads and validates the envelope; returns the element list or a failure.
std::optional<json> read_envelope(const std::filesystem::path& dir, const GroupContext& ctx, Kind kind,
                                  LoadResult& result) {
  std::string key = cache_key(ctx.matrix(), ctx.length_bound());
  auto path = cache_file(dir, key, kind);
  if (!std::filesystem::exists(path)) {
    result = {LoadStatus::Miss, "no cache file " + path.string()};
    return std::nullopt;
  }
  try {
    std::ifstream in(path, std::ios::binary);
    json doc = json::parse(in);
    if (doc.value("format", "") != "heckelab-cache" || doc.value("kind", "") != kind_name(kind) ||
        doc.value("version", -1) != kConventionVersion || doc.value("key", "") != key ||
        doc.value("order", std::size_t{0}) != ctx.size())
      throw Error("header does not match");
    json elements = doc.at("elements");
    if (doc.value("checksum", "") != hex(fnv1a(elements.dump()))) throw Error("checksum mismatch");
    if (!elements.is_array() || elements.size() != ctx.size()) throw Error("wrong element count");
    return elements;
  } catch (const std::exception& e) {
    result = {LoadStatus::Corrupt, "corrupt cache file " + path.string() + ": " + e.what()};
    return std::nullopt;
  }
}

}  // namespace

std::string cache_key(const CoxeterMatrix& matrix, std::optional<int> length_bound, int version) {
  std::ostringstream os;
  os << "v" << version << "|" << matrix.rank() << "|";
  for (int m : matrix.entries()) os << m << ",";
  os << "|" << (length_bound ? std::to_string(*length_bound) : std::string("complete"));
  return hex(fnv1a(os.str()));
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key, Kind kind) {
  return dir / (key + "." + kind_name(kind) + ".json");
}

void store(const std::filesystem::path& dir, const KLBasis& kl, unsigned jobs) {
  compute_all_kl(kl, jobs);
  const GroupContext& ctx = kl.context();
  json elements = json::array();
  for (ElementId x : ctx.enumerate())
    elements.push_back({{"x", io::word_to_json(ctx.word(x))}, {"element", io::element_to_json(ctx, kl.kl_element(x))}});
  finish_and_write(dir, ctx, Kind::KL, std::move(elements));
}

void store(const std::filesystem::path& dir, const ProjectiveBasis& proj, unsigned jobs) {
  compute_all_projective(proj, jobs);
  const GroupContext& ctx = proj.context();
  json elements = json::array();
  for (ElementId x : ctx.enumerate()) {
    json corrections = json::array();
    for (const auto& [y, p] : proj.corrections(x))
      corrections.push_back({{"y", io::word_to_json(ctx.word(y))}, {"p", io::poly_to_json(p)}});
    elements.push_back({{"x", io::word_to_json(ctx.word(x))},
                        {"element", io::element_to_json(ctx, proj.proj_element(x))},
                        {"corrections", std::move(corrections)}});
  }
  finish_and_write(dir, ctx, Kind::Projective, std::move(elements));
}

LoadResult load(const std::filesystem::path& dir, const KLBasis& kl) {
  const GroupContext& ctx = kl.context();
  LoadResult result;
  auto elements = read_envelope(dir, ctx, Kind::KL, result);
  if (!elements) return result;
  std::vector<std::pair<ElementId, HeckeElement>> parsed;
  try {
    for (const auto& item : *elements) {
      auto x = ctx.find_canonical(io::word_from_json(item.at("x")));
      if (!x) throw Error("unknown element");
      parsed.emplace_back(*x, io::element_from_json(ctx, item.at("element")));
    }
  } catch (const std::exception& e) {
    return {LoadStatus::Corrupt, std::string("corrupt KL cache: ") + e.what()};
  }
  for (auto& [x, c] : parsed) kl.preload(x, std::move(c));
  return {LoadStatus::Loaded, "loaded " + std::to_string(parsed.size()) + " KL elements"};
}

LoadResult load(const std::filesystem::path& dir, const ProjectiveBasis& proj) {
  const GroupContext& ctx = proj.context();
  LoadResult result;
  auto elements = read_envelope(dir, ctx, Kind::Projective, result);
  if (!elements) return result;
  struct Parsed {
    ElementId x;
    HeckeElement element;
    ProjectiveBasis::Corrections corrections;
  };
  std::vector<Parsed> parsed;
  try {
    for (const auto& item : *elements) {
      auto x = ctx.find_canonical(io::word_from_json(item.at("x")));
      if (!x) throw Error("unknown element");
      Parsed p{*x, io::element_from_json(ctx, item.at("element")), {}};
      for (const auto& c : item.at("corrections")) {
        auto y = ctx.find_canonical(io::word_from_json(c.at("y")));
        if (!y) throw Error("unknown element");
        p.corrections.emplace_back(*y, io::poly_from_json(c.at("p")));
      }
      parsed.push_back(std::move(p));
    }
  } catch (const std::exception& e) {
    return {LoadStatus::Corrupt, std::string("corrupt projective cache: ") + e.what()};
  }
  for (auto& p : parsed) proj.preload(p.x, std::move(p.element), std::move(p.corrections));
  return {LoadStatus::Loaded, "loaded " + std::to_string(parsed.size()) + " projective elements"};
}

}  // namespace heckelab::cache
