#include "ocmf/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ocmf/forms.hpp"

namespace ocmf {

namespace fs = std::filesystem;

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path SeriesCache::path_for(const std::string& kind, const std::string& domain) const {
  return dir_ / (kind + "-" + domain + ".v" + std::to_string(kCacheFormatVersion) + ".series");
}

std::optional<LaurentSeries<BigInt>> SeriesCache::read(const fs::path& file, const std::string& kind,
                                                       const std::string& domain) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  auto corrupt = [&](const std::string& why) -> std::optional<LaurentSeries<BigInt>> {
    warnings_.push_back("ignoring corrupt cache entry " + file.string() + ": " + why);
    return std::nullopt;
  };
  std::string line;
  if (!std::getline(in, line)) return corrupt("empty file");
  std::istringstream header(line);
  std::string magic, hkind, hdomain;
  int version = 0;
  long low = 0, qprec = 0;
  if (!(header >> magic >> version >> hkind >> hdomain >> low >> qprec) || magic != "ocmf-series")
    return corrupt("bad header");
  if (version != kCacheFormatVersion) return corrupt("format version " + std::to_string(version));
  if (hkind != kind || hdomain != domain) return corrupt("key mismatch");
  if (qprec < low) return corrupt("qprec below low");
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(qprec - low));
  while (std::getline(in, line)) {
    BigInt x;
    if (line.empty() || x.set_str(line, 10) != 0) return corrupt("bad coefficient line");
    coeffs.push_back(std::move(x));
  }
  if (static_cast<long>(coeffs.size()) != qprec - low) return corrupt("truncated coefficient list");
  return LaurentSeries<BigInt>(static_cast<int>(low), static_cast<int>(qprec), std::move(coeffs),
                               BigInt(0));
}

std::optional<LaurentSeries<BigInt>> SeriesCache::get(const std::string& kind,
                                                      const std::string& domain, int qprec) {
  auto f = read(path_for(kind, domain), kind, domain);
  if (!f || f->qprec() < qprec) return std::nullopt;
  return f->truncate(qprec);
}

void SeriesCache::put(const std::string& kind, const std::string& domain,
                      const LaurentSeries<BigInt>& f) {
  const auto target = path_for(kind, domain);
  {
    const std::size_t before = warnings_.size();
    const auto existing = read(target, kind, domain);
    warnings_.resize(before);
    if (existing && existing->qprec() >= f.qprec()) return;
  }
  static std::atomic<unsigned> counter{0};
  const auto tmp = fs::path(target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                            std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << "ocmf-series " << kCacheFormatVersion << ' ' << kind << ' ' << domain << ' ' << f.low()
        << ' ' << f.qprec() << '\n';
    for (int n = f.low(); n < f.qprec(); ++n) out << f.coeff(n).get_str() << '\n';
    if (!out.flush()) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename cache entry into " + target.string());
  }
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("OCMF_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

JSource cached_j_source(SeriesCache& cache) {
  return [&cache](int qprec) {
    if (auto hit = cache.get("j", "exact", qprec)) return *hit;
    auto j = j_invariant(qprec);
    cache.put("j", "exact", j);
    return j;
  };
}

}  // namespace ocmf
