#include "ocmf/job.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <memory>
#include <sstream>

#include "ocmf/cache.hpp"
#include "ocmf/clay.hpp"
#include "ocmf/eigen.hpp"
#include "ocmf/spectral.hpp"

namespace ocmf {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::Charpoly:
      return "charpoly";
    case Command::Slopes:
      return "slopes";
    case Command::Eigen:
      return "eigen";
    case Command::Clay:
      return "clay";
    case Command::Compare:
      return "compare";
    case Command::Stabilize:
      return "stabilize";
  }
  return "";
}

std::optional<Command> parse_command(const std::string& name) {
  for (auto c : {Command::Charpoly, Command::Slopes, Command::Eigen, Command::Clay,
                 Command::Compare, Command::Stabilize})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::optional<std::string> validate(const JobConfig& c) {
  const bool clay = c.command == Command::Clay;
  if (clay) {
    if (c.p != 5 && c.p != 11 && c.p != 17 && c.p != 19) return "clay needs p in {5, 11, 17, 19}";
  } else if (c.p != 11 && c.p != 17 && c.p != 19) {
    return "p must be one of 11, 17, 19";
  }
  if (c.weight != 0 && (c.weight < 4 || c.weight % 2 != 0)) return "weight must be 0 or even >= 4";
  if (c.command == Command::Compare && c.weight != 0)
    return "compare uses the weight-0 slope formulas; weight must be 0";
  if (c.precision < 1) return "prec must be >= 1";
  if (c.dim < 1) return "dim must be >= 1";
  if (c.qprec && *c.qprec < 1) return "qprec must be >= 1 or auto";
  if (c.iterations < 1) return "iters must be >= 1";
  if (c.count < 0) return "count must be >= 1";
  if (c.window < 0) return "window must be >= 1";
  if (!std::is_sorted(c.dims.begin(), c.dims.end())) return "dims must ascend";
  for (int d : c.dims)
    if (d < 1) return "dims must be >= 1";
  return std::nullopt;
}

namespace {

std::string timestamp_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json params_json(const JobConfig& c) {
  json p{{"command", to_string(c.command)},
         {"p", c.p},
         {"weight", c.weight},
         {"dim", c.dim},
         {"prec", c.precision},
         {"qprec", c.qprec ? json(*c.qprec) : json("auto")},
         {"iters", c.iterations},
         {"seed", c.seed ? json(std::to_string(*c.seed)) : json(nullptr)},
         {"count", c.count},
         {"window", c.window},
         {"dims", c.dims}};
  return p;
}

BasisSpec spec_of(const JobConfig& c) {
  BasisSpec s;
  s.p = c.p;
  s.weight = c.weight;
  s.d = c.dim;
  s.precision = c.precision;
  s.qprec = c.qprec.value_or(0);
  return s;
}

json valuation_json(const HalfIntValuation& v) { return v.to_string(); }

json char_series_json(const CharSeries& cs) {
  json out = json::array();
  for (const auto& c : cs.coefficients)
    out.push_back({{"coeff", c.to_string()}, {"valuation", valuation_json(c.valuation())}});
  return out;
}

json precision_json(const PrecisionReport& r) {
  json cols = json::array();
  for (const auto& v : r.column_residuals) cols.push_back(valuation_json(v));
  return {{"precision", r.precision},
          {"working_precision", r.working_precision},
          {"guaranteed_precision", r.guaranteed_precision},
          {"qprec", r.qprec},
          {"residual_margin", r.residual_margin},
          {"residual", valuation_json(r.residual)},
          {"column_residuals", cols}};
}

// Full-section slopes; one exact slope-0 entry is marked non-cuspidal.
json slopes_json(const SlopeMultiset& s, int weight, std::vector<Rational>* cuspidal) {
  json out = json::array();
  bool removed = false;
  for (const auto& seg : s.segments) {
    int mult = seg.multiplicity;
    auto emit = [&](int m, bool cusp) {
      out.push_back({{"slope", to_string(seg.slope)},
                     {"mult", m},
                     {"classical", to_string(classicality(seg.slope, weight))},
                     {"cuspidal", cusp},
                     {"provisional", seg.provisional}});
      if (cusp && cuspidal && !seg.provisional) cuspidal->insert(cuspidal->end(), m, seg.slope);
    };
    if (!removed && !seg.provisional && seg.slope == 0) {
      removed = true;
      emit(1, false);
      if (--mult == 0) continue;
    }
    emit(mult, true);
  }
  return out;
}

json strings(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return "{" + s + "}";
}

void render_char_series(std::ostringstream& os, const CharSeries& cs) {
  os << "det(1 - t U_p) mod p^" << cs.ring->precision() << "\n";
  for (std::size_t i = 0; i < cs.coefficients.size(); ++i) {
    const auto& c = cs.coefficients[i];
    if (c.is_zero()) continue;
    os << "  c_" << std::left << std::setw(3) << i << std::right << std::setw(24) << c.to_string()
       << "  v = " << c.valuation().to_string() << "\n";
  }
  os << "  (remaining coefficients vanish mod p^" << cs.ring->precision() << ")\n";
}

void render_slopes(std::ostringstream& os, const json& slopes) {
  os << "  slope   mult  classical  cuspidal\n";
  for (const auto& s : slopes) {
    std::string slope = s["slope"].get<std::string>();
    if (s["provisional"].get<bool>()) slope = ">=" + slope;
    os << "  " << std::left << std::setw(8) << slope << std::setw(6) << s["mult"].get<int>()
       << std::setw(11) << s["classical"].get<std::string>()
       << (s["cuspidal"].get<bool>() ? "yes" : "no") << std::right << "\n";
  }
}

json clay_json(const ClayPrediction& pred) {
  json entries = json::array();
  for (const auto& e : pred.entries)
    entries.push_back({{"i", e.index},
                       {"j", e.j},
                       {"k", e.k},
                       {"slope", e.slope ? json(std::to_string(*e.slope)) : json("undefined")}});
  return {{"p", pred.p},
          {"period", pred.period},
          {"convention", pred.convention},
          {"corrections", pred.corrections},
          {"predictions", entries}};
}

struct Pipeline {
  BasisFamily fam;
  UpMatrix matrix;
  CharSeries series;
  SlopeMultiset slopes;
};

Pipeline run_pipeline(const JobConfig& c, const JSource& source) {
  auto fam = build_basis(spec_of(c), source);
  auto m = up_matrix(fam);
  auto cs = char_series(m);
  auto s = newton_slopes(cs);
  return {std::move(fam), std::move(m), std::move(cs), std::move(s)};
}

void run_command(const JobConfig& c, const JSource& source, json& report, std::ostringstream& os) {
  switch (c.command) {
    case Command::Charpoly:
    case Command::Slopes: {
      const auto pl = run_pipeline(c, source);
      report["char_series"] = char_series_json(pl.series);
      report["precision_report"] = precision_json(pl.matrix.report);
      std::vector<Rational> cusp;
      report["slopes"] = slopes_json(pl.slopes, c.weight, &cusp);
      report["cuspidal_slopes"] = strings(cusp);
      report["certified_slopes"] = pl.slopes.certified;
      os << "p = " << c.p << ", k = " << c.weight << ", d = " << c.dim << ", N = " << c.precision
         << " (" << pl.fam.size() << "x" << pl.fam.size() << " section)\n";
      if (c.command == Command::Charpoly) render_char_series(os, pl.series);
      render_slopes(os, report["slopes"]);
      os << "cuspidal slopes: " << join(cusp) << "\n";
      return;
    }
    case Command::Eigen: {
      const auto pl = run_pipeline(c, source);
      IterateOptions opt;
      opt.steps = c.iterations;
      const auto r = cuspidal_eigenform(pl.matrix, c.seed, opt);
      json coords = json::array();
      for (std::size_t i = 0; i < r.coordinates.size(); ++i)
        coords.push_back({{"index", pl.matrix.indices[i]}, {"value", r.coordinates[i].to_string()}});
      report["eigen"] = {{"eigenvalue", r.eigenvalue.to_string()},
                         {"slope", to_string(r.eigenvalue.valuation().to_rational())},
                         {"guaranteed_precision", r.guaranteed_precision},
                         {"iterations", r.iterations},
                         {"normalizing_index", pl.matrix.indices[r.normalizing]},
                         {"start", c.seed ? "random" : "index +1"},
                         {"seed", c.seed ? json(std::to_string(*c.seed)) : json(nullptr)},
                         {"deflated", c.weight == 0 ? json::array({"constant function"}) : json::array()},
                         {"coordinates", coords}};
      report["precision_report"] = precision_json(pl.matrix.report);
      os << "eigenvalue " << r.eigenvalue.to_string() << " mod p^" << c.precision << " (slope "
         << r.eigenvalue.valuation().to_string() << ", residual precision " << r.guaranteed_precision
         << ", " << r.iterations << " iterations)\n";
      for (std::size_t i = 0; i < r.coordinates.size(); ++i)
        os << "  " << std::setw(4) << pl.matrix.indices[i] << "  " << r.coordinates[i].to_string() << "\n";
      return;
    }
    case Command::Clay: {
      const int count = c.count ? c.count : 2 * clay_period(c.p);
      const auto pred = clay_slopes(c.p, count);
      report["clay"] = clay_json(pred);
      os << "convention: " << pred.convention << "\n";
      for (const auto& corr : pred.corrections) os << "correction: " << corr << "\n";
      for (const auto& e : pred.entries)
        os << "  i = " << std::setw(3) << e.index << "  s = "
           << (e.slope ? std::to_string(*e.slope) : "undefined") << "\n";
      return;
    }
    case Command::Compare: {
      const auto pl = run_pipeline(c, source);
      const auto computed = pl.slopes.exact();
      const int count = c.count ? c.count : 2 * clay_period(c.p);
      const auto pred = clay_slopes(c.p, count);
      const int window = c.window ? c.window
                                  : static_cast<int>(std::min(pred.defined().size(), computed.size()));
      const auto cmp = compare_predictions(pred, computed, window);
      report["clay"] = clay_json(pred);
      report["clay"]["comparison"] = {{"window", cmp.window},
                                      {"predicted", strings(cmp.predicted)},
                                      {"computed", strings(cmp.computed)},
                                      {"match", cmp.match},
                                      {"mismatches", cmp.mismatches},
                                      {"convention", cmp.convention}};
      report["slopes"] = slopes_json(pl.slopes, c.weight, nullptr);
      report["precision_report"] = precision_json(pl.matrix.report);
      os << "window " << cmp.window << ": predicted " << join(cmp.predicted) << " vs computed "
         << join(cmp.computed) << (cmp.match ? "  match\n" : "  MISMATCH\n");
      for (const auto& m : cmp.mismatches) os << "  " << m << "\n";
      return;
    }
    case Command::Stabilize: {
      const auto dims = c.dims.empty() ? std::vector<int>{c.dim, c.dim + 2} : c.dims;
      const auto rep = stabilization_check(spec_of(c), dims, source);
      json runs = json::array();
      for (std::size_t k = 0; k < dims.size(); ++k)
        runs.push_back({{"dim", dims[k]},
                        {"char_series", char_series_json(rep.series[k])},
                        {"slopes", slopes_json(rep.slopes[k], c.weight, nullptr)}});
      json pairs = json::array();
      for (const auto& pr : rep.pairs)
        pairs.push_back({{"d_low", pr.d_low},
                         {"d_high", pr.d_high},
                         {"equal", pr.equal},
                         {"stable_prefix", pr.stable_prefix}});
      report["stabilization"] = {{"dims", dims},
                                 {"runs", runs},
                                 {"pairs", pairs},
                                 {"stable_in_all", rep.stable_in_all},
                                 {"stable_prefix", rep.stable_prefix},
                                 {"stable_slopes", strings(rep.stable_slopes)}};
      for (const auto& pr : rep.pairs)
        os << "d = " << pr.d_low << " -> " << pr.d_high << ": c_0..c_" << pr.stable_prefix
           << " unchanged mod p^" << c.precision << "\n";
      os << "stable in all runs through c_" << rep.stable_prefix << "\n";
      os << "stable slopes: " << join(rep.stable_slopes) << "\n";
      return;
    }
  }
}

}  // namespace

JobOutcome run(const JobConfig& config) {
  JobOutcome out;
  out.report = {{"params", params_json(config)},
                {"versions",
                 {{"ocmf", kVersion},
                  {"schema", kSchemaVersion},
                  {"cache_format", kCacheFormatVersion},
                  {"gmp", gmp_version}}},
                {"timestamp", timestamp_now()}};
  if (auto err = validate(config)) {
    out.exit_code = 2;
    out.report["error"] = {{"kind", "config"}, {"message", *err}};
    out.text = "config error: " + *err + "\n";
    return out;
  }
  std::ostringstream os;
  try {
    std::unique_ptr<SeriesCache> cache;
    JSource source;
    if (const auto dir = resolve_cache_dir(config.cache_dir)) {
      cache = std::make_unique<SeriesCache>(*dir);
      source = cached_j_source(*cache);
    }
    run_command(config, source, out.report, os);
    if (cache) out.warnings = cache->warnings();
  } catch (const Error& e) {
    out.exit_code = 1;
    out.report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    os << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  }
  out.text = os.str();
  return out;
}

json strip_timestamp(json report) {
  report.erase("timestamp");
  return report;
}

}  // namespace ocmf
