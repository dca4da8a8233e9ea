#include <polytri/cache.hpp>

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include <polytri/counting.hpp>
#include <polytri/version.hpp>

namespace polytri {

std::string family_name(CountFamily f) {
  switch (f) {
    case CountFamily::balanced: return "balanced";
    case CountFamily::triangle: return "triangle";
    case CountFamily::partial: return "partial";
    case CountFamily::general: return "general";
    case CountFamily::isc: return "isc";
  }
  return "?";
}

std::optional<CountFamily> parse_family(const std::string& name) {
  for (CountFamily f : {CountFamily::balanced, CountFamily::triangle, CountFamily::partial,
                        CountFamily::general, CountFamily::isc})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

Count recompute(const CountRecord& rec) {
  const auto& p = rec.params;
  auto as_int = [&](size_t i) { return static_cast<int>(p.at(i)); };
  switch (rec.family) {
    case CountFamily::balanced:
      return balanced_count({as_int(0), as_int(1)});
    case CountFamily::triangle:
      return triangle_count({as_int(0), as_int(1), as_int(2)});
    case CountFamily::partial:
      return partial_count({as_int(0), as_int(1)});
    case CountFamily::isc:
      return indented_count({as_int(0), as_int(1)});
    case CountFamily::general: {
      std::vector<int> sides(p.begin(), p.end());
      return general_count(sides);
    }
  }
  throw std::logic_error("recompute: unknown family");
}

CacheFile::CacheFile(std::string path) : path_(std::move(path)) {}

void CacheFile::load() {
  records_.clear();
  std::ifstream in(path_);
  if (!in.is_open()) return;  // a missing cache is an empty cache
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("family") || !j.contains("params") || !j.contains("count"))
      throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": malformed cache line");
    auto fam = parse_family(j["family"].get<std::string>());
    if (!fam) throw std::runtime_error(path_ + ": unknown family in cache");
    CountRecord rec;
    rec.family = *fam;
    for (const auto& v : j["params"]) rec.params.push_back(v.get<long>());
    rec.count = Count(j["count"].get<std::string>());
    auto existing = lookup(rec.family, rec.params);
    if (existing && *existing != rec.count)
      throw std::runtime_error(path_ + ": conflicting duplicate cache entries");
    records_.push_back(std::move(rec));
  }
}

void CacheFile::append(const CountRecord& rec) {
  auto existing = lookup(rec.family, rec.params);
  if (existing) {
    if (*existing != rec.count)
      throw std::runtime_error(path_ + ": cache conflict for " + family_name(rec.family));
    return;
  }
  nlohmann::json j;
  j["family"] = family_name(rec.family);
  j["params"] = rec.params;
  j["count"] = to_decimal(rec.count);
  j["tool_version"] = kVersion;
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open()) throw std::runtime_error(path_ + ": cannot open cache for append");
  out << j.dump() << '\n';
  records_.push_back(rec);
}

std::optional<Count> CacheFile::lookup(CountFamily family, const std::vector<long>& params) const {
  for (const auto& r : records_)
    if (r.family == family && r.params == params) return r.count;
  return std::nullopt;
}

}  // namespace polytri
