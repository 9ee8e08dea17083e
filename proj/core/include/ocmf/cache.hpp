#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ocmf/basis.hpp"
#include "ocmf/qseries.hpp"

namespace ocmf {

inline constexpr int kCacheFormatVersion = 1;

/// On-disk store of integer q-series keyed by (kind, p or "exact").
/// One file per key holds the longest series put so far; shorter requests
/// are served by truncation.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// nullopt on a miss, including when the stored qprec is too short or the
  /// file is corrupt (the latter adds a warning).
  std::optional<LaurentSeries<BigInt>> get(const std::string& kind, const std::string& domain,
                                           int qprec);
  /// Writes atomically (temporary file + rename); keeps an existing entry
  /// that is already at least as long.
  void put(const std::string& kind, const std::string& domain, const LaurentSeries<BigInt>& f);

  std::filesystem::path path_for(const std::string& kind, const std::string& domain) const;
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::optional<LaurentSeries<BigInt>> read(const std::filesystem::path& file,
                                            const std::string& kind, const std::string& domain);

  std::filesystem::path dir_;
  std::vector<std::string> warnings_;
};

/// The --cache-dir flag if given, else $OCMF_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// j-invariant source backed by the cache (kind "j", domain "exact").
JSource cached_j_source(SeriesCache& cache);

}  // namespace ocmf
