#pragma once

#include <optional>
#include <string>
#include <vector>

#include <polytri/bigint.hpp>

namespace polytri {

enum class CountFamily { balanced, triangle, partial, general, isc };

std::string family_name(CountFamily f);
std::optional<CountFamily> parse_family(const std::string& name);

struct CountRecord {
  CountFamily family{};
  std::vector<long> params;
  Count count;

  bool operator==(const CountRecord&) const = default;
};

// Re-derives the count from the family formula; used to validate records.
Count recompute(const CountRecord& rec);

// Append-only JSON Lines store, one record per line with the count as a
// decimal string. A duplicate key must carry the identical count: a conflict
// is a correctness bug, so it raises instead of merging.
class CacheFile {
 public:
  explicit CacheFile(std::string path);

  // Loads existing records; throws std::runtime_error on malformed lines or
  // internal conflicts.
  void load();

  // No-op when the identical record is already present; throws on conflict.
  void append(const CountRecord& rec);

  const std::vector<CountRecord>& records() const { return records_; }
  std::optional<Count> lookup(CountFamily family, const std::vector<long>& params) const;

 private:
  std::string path_;
  std::vector<CountRecord> records_;
};

}  // namespace polytri
