#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlv/cache/record_cache.hpp"
#include "hlv/partitions/multipartition.hpp"

namespace hlv::cli {

enum ExitCode : int {
  kOk = 0,
  kComputationError = 1,
  kTheoremFailure = 2,
  kConjectureFailure = 3,
  kUsageError = 64,
};

using Json = nlohmann::ordered_json;

// Runs one command line (argv[0] is the program name). JSON goes to `out`,
// usage text and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Cached kernel records live in one RecordCache file under the cache directory.
class KernelStore {
 public:
  // nullopt disables the disk layer.
  explicit KernelStore(const std::optional<std::filesystem::path>& dir);

  // {"mu", "g", "d_mu", "hlv", "E", "kac", "mhp", "checks": {...}}.
  Json record(const MultiPartition& mu, int g);

 private:
  std::optional<RecordCache> cache_;
};

// Reads `key` from the cache when the stored payload passes `valid`,
// otherwise computes it, stores it and returns it. Without a cache the
// producer is called directly.
std::string cache_get_or_compute(RecordCache* cache, const std::string& key,
                                 const std::function<std::string()>& producer,
                                 const std::function<bool(const std::string&)>& valid = {});

// Uncached kernel record.
Json compute_kernel_record(const MultiPartition& mu, int g);

}  // namespace hlv::cli
