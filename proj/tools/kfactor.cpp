// kfactor: exact counts and closed-form estimates for k-almost primes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kfactor/counting.hpp"
#include "kfactor/errors.hpp"
#include "kfactor/estimators.hpp"
#include "kfactor/limit_sequence.hpp"
#include "kfactor/output.hpp"
#include "kfactor/sieve_cache.hpp"
#include "kfactor/specfun.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

namespace fs = std::filesystem;
using kfactor::output::Cell;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalConfig {
  std::uint64_t sieve_limit = 10'000'000;
  std::uint64_t max_prime_limit = 100'000'000;
  std::string cache_dir;  // resolved in main
  std::string format = "csv";
  bool verbose = false;
  std::string command_echo;
};

kfactor::output::Format parse_format(const std::string& f) {
  return f == "json" ? kfactor::output::Format::kJson
                     : kfactor::output::Format::kCsv;
}

void note(const GlobalConfig& cfg, const std::string& message) {
  if (cfg.verbose) std::cerr << "# " << message << "\n";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

fs::path cache_file_path(const GlobalConfig& cfg, std::uint64_t limit) {
  return fs::path(cfg.cache_dir) /
         ("kfl1-" + std::to_string(limit) + ".bin");
}

// Looks for a usable cache file whose limit covers `limit`; corrupt or
// unreadable candidates are skipped.
std::optional<kfactor::FactorCountTable> try_load_cached(
    const GlobalConfig& cfg, std::uint64_t limit) {
  std::error_code ec;
  if (cfg.cache_dir.empty() || !fs::is_directory(cfg.cache_dir, ec))
    return std::nullopt;
  std::vector<std::pair<std::uint64_t, fs::path>> candidates;
  for (const auto& entry : fs::directory_iterator(cfg.cache_dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("kfl1-", 0) != 0 || entry.path().extension() != ".bin")
      continue;
    const std::string digits = name.substr(5, name.size() - 5 - 4);
    char* end = nullptr;
    const std::uint64_t file_limit = std::strtoull(digits.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || file_limit < limit) continue;
    candidates.emplace_back(file_limit, entry.path());
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& [file_limit, path] : candidates) {
    try {
      Stopwatch timer;
      auto table = kfactor::load_sieve_cache(path);
      note(cfg, "loaded cache " + path.string() + " in " +
                    format_seconds(timer.seconds()));
      return table;
    } catch (const kfactor::IoError& e) {
      note(cfg, std::string("ignoring cache: ") + e.what());
    }
  }
  return std::nullopt;
}

kfactor::FactorCountTable acquire_table(const GlobalConfig& cfg,
                                        std::uint64_t limit) {
  if (auto cached = try_load_cached(cfg, limit)) return std::move(*cached);
  Stopwatch timer;
  auto table = kfactor::FactorCountTable::build(limit);
  note(cfg, "built factor table to " + std::to_string(limit) + " in " +
                format_seconds(timer.seconds()));
  return table;
}

void emit(const GlobalConfig& cfg, std::optional<std::string> preset,
          std::optional<double> c, kfactor::output::Payload payload) {
  kfactor::output::Metadata meta;
  meta.version = kVersion;
  meta.command = cfg.command_echo;
  meta.preset = std::move(preset);
  meta.c = c;
  meta.generated = kfactor::output::current_utc_timestamp();
  kfactor::output::write(std::cout, meta, payload, parse_format(cfg.format));
}

Cell cell_of(const std::optional<double>& v, bool raw) {
  if (!v) return std::monostate{};
  if (raw) return *v;
  return kfactor::output::round_half_away(*v);
}

std::vector<int> parse_k_selection(const std::string& k_range,
                                   const std::vector<int>& k_flags,
                                   int lo_default, int hi_default) {
  std::vector<int> ks;
  if (!k_range.empty()) {
    const auto sep = k_range.find("..");
    if (sep == std::string::npos)
      throw ArgumentError("--k-range expects the form a..b");
    try {
      const int lo = std::stoi(k_range.substr(0, sep));
      const int hi = std::stoi(k_range.substr(sep + 2));
      if (lo < 1 || hi < lo) throw ArgumentError("bad --k-range bounds");
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad --k-range value: " + k_range);
    }
  } else if (!k_flags.empty()) {
    ks = k_flags;
    for (const int k : ks)
      if (k < 1) throw ArgumentError("k values must be >= 1");
  } else {
    for (int k = lo_default; k <= hi_default; ++k) ks.push_back(k);
  }
  return ks;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::uint64_t x = 0;
  int k = 0;
  std::string mode = "big";
  std::string engine = "auto";
};

void run_count(const GlobalConfig& cfg, const CountArgs& args) {
  const auto mode = args.mode == "little" ? kfactor::CountMode::kLittleOmega
                                          : kfactor::CountMode::kBigOmega;
  std::string engine = args.engine;
  if (engine == "auto")
    engine = args.x <= cfg.sieve_limit ? "sieve" : "recursive";

  std::uint64_t count = 0;
  if (engine == "recursive") {
    if (mode == kfactor::CountMode::kLittleOmega)
      throw kfactor::DomainError(
          "the recursive engine counts big-omega only; use --engine sieve");
    if (args.k <= 0) throw kfactor::DomainError("k must be positive");
    const std::uint64_t needed =
        kfactor::recursive_prime_limit(args.x, args.k);
    if (needed > cfg.max_prime_limit)
      throw kfactor::ResourceError(
          "recursive count needs primes to " + std::to_string(needed) +
              ", above --max-prime-limit " +
              std::to_string(cfg.max_prime_limit),
          needed);
    Stopwatch timer;
    const auto primes =
        kfactor::PrimeTable::build(std::max<std::uint64_t>(needed, 2));
    note(cfg, "built prime table to " + std::to_string(needed) + " in " +
                  format_seconds(timer.seconds()));
    count = kfactor::count_exact_recursive(primes, args.x, args.k);
  } else {
    const auto table = acquire_table(cfg, std::max<std::uint64_t>(args.x, 2));
    count = kfactor::count_exact_sieve(table, args.x, args.k, mode);
  }

  kfactor::output::Payload payload;
  payload.columns = {"count"};
  payload.rows.push_back({Cell{count}});
  emit(cfg, std::nullopt, std::nullopt, std::move(payload));
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::uint64_t x = 0;
  int k_max = 20;
  std::vector<std::string> estimators = {"landau", "cdf"};
  std::string preset = "calibrated";
  bool raw = false;
};

void run_table(const GlobalConfig& cfg, const TableArgs& args) {
  const auto preset = kfactor::estimators::parse_preset(args.preset);
  if (!preset) throw ArgumentError("unknown preset: " + args.preset);
  const auto params = kfactor::estimators::preset_params(*preset);

  const bool want_landau =
      std::count(args.estimators.begin(), args.estimators.end(), "landau") > 0;
  const bool want_selberg =
      std::count(args.estimators.begin(), args.estimators.end(), "selberg") > 0;
  const bool want_cdf =
      std::count(args.estimators.begin(), args.estimators.end(), "cdf") > 0;

  const auto table = acquire_table(cfg, std::max<std::uint64_t>(args.x, 2));
  const auto comparison = kfactor::estimators::comparison_table(
      table, args.x, args.k_max, params, want_selberg);

  kfactor::output::Payload payload;
  payload.columns = {"k"};
  if (want_landau) payload.columns.push_back("landau");
  if (want_selberg) payload.columns.push_back("selberg");
  if (want_cdf) payload.columns.push_back("cdf");
  payload.columns.push_back("actual");
  for (const auto& row : comparison.rows) {
    std::vector<Cell> cells;
    cells.emplace_back(static_cast<std::int64_t>(row.k));
    if (want_landau) cells.push_back(cell_of(row.landau, args.raw));
    if (want_selberg) cells.push_back(cell_of(row.selberg, args.raw));
    if (want_cdf) cells.push_back(cell_of(row.cdf, args.raw));
    cells.emplace_back(row.actual);
    payload.rows.push_back(std::move(cells));
  }
  emit(cfg, std::string(kfactor::estimators::preset_name(*preset)), params.c,
       std::move(payload));
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
  std::uint64_t x_max = 1000;
  std::string k_range;
  std::vector<int> k_values;
  int k_max = 20;
  double c = 0.0;  // 0 = default constant
  std::uint64_t step = 0;
};

void run_series_ratio(const GlobalConfig& cfg, const SeriesArgs& args) {
  const double c = args.c > 0.0 ? args.c : kfactor::specfun::c_default();
  const auto ks = parse_k_selection(args.k_range, args.k_values, 2, 5);
  const auto primes =
      kfactor::PrimeTable::build(std::max<std::uint64_t>(args.x_max, 2));
  const auto series =
      kfactor::estimators::ratio_series(primes, args.x_max, ks, c, args.step);

  kfactor::output::Payload payload;
  payload.columns = {"x"};
  for (const int k : series.k_list)
    payload.columns.push_back("ratio_k" + std::to_string(k));
  payload.columns.insert(payload.columns.end(),
                         {"sqrt_Li", "two_Li_cuberoot", "curve_over_R",
                          "note"});
  for (const auto& row : series.rows) {
    std::vector<Cell> cells;
    cells.emplace_back(row.x);
    for (const auto& r : row.ratios)
      cells.push_back(r ? Cell{*r} : Cell{std::monostate{}});
    cells.push_back(row.sqrt_li ? Cell{*row.sqrt_li} : Cell{std::monostate{}});
    cells.push_back(row.two_li_cuberoot ? Cell{*row.two_li_cuberoot}
                                        : Cell{std::monostate{}});
    cells.push_back(row.curve_over_r ? Cell{*row.curve_over_r}
                                     : Cell{std::monostate{}});
    cells.emplace_back(row.note);
    payload.rows.push_back(std::move(cells));
  }
  emit(cfg, std::nullopt, c, std::move(payload));
}

void run_series_growth(const GlobalConfig& cfg, const SeriesArgs& args) {
  const double c = args.c > 0.0 ? args.c : kfactor::specfun::c_default();
  const auto ks = parse_k_selection(args.k_range, args.k_values, 1, 9);
  const auto primes =
      kfactor::PrimeTable::build(std::max<std::uint64_t>(args.x_max, 2));

  kfactor::output::Payload payload;
  payload.columns = {"x"};
  for (const int k : ks)
    payload.columns.push_back("actual_k" + std::to_string(k));
  payload.columns.push_back("limit_estimate");
  payload.columns.push_back("note");
  for (const std::uint64_t x :
       kfactor::estimators::series_grid(args.x_max, args.step)) {
    std::vector<Cell> cells;
    cells.emplace_back(x);
    std::string row_note;
    for (const int k : ks) {
      if (k - 1 >= 64 ||
          x > (std::numeric_limits<std::uint64_t>::max() >> (k - 1))) {
        cells.emplace_back(std::monostate{});
        row_note = "some k skipped: 2^(k-1) x overflows";
        continue;
      }
      cells.emplace_back(
          kfactor::count_exact_recursive(primes, x << (k - 1), k));
    }
    try {
      cells.emplace_back(
          kfactor::estimators::limit_estimate(static_cast<double>(x), c));
    } catch (const kfactor::DomainError&) {
      cells.emplace_back(std::monostate{});
      row_note = "limit curve undefined at this x";
    }
    cells.emplace_back(row_note);
    payload.rows.push_back(std::move(cells));
  }
  emit(cfg, std::nullopt, c, std::move(payload));
}

void run_series_bounding(const GlobalConfig& cfg, const SeriesArgs& args) {
  kfactor::output::Payload payload;
  payload.columns = {"k", "bounding_curve", "translate_curve"};
  for (int k = 0; k <= args.k_max; ++k) {
    const double kd = static_cast<double>(k);
    payload.rows.push_back({Cell{static_cast<std::int64_t>(k)},
                            Cell{kfactor::estimators::bounding_curve(kd)},
                            Cell{kfactor::estimators::translate_curve(kd)}});
  }
  emit(cfg, std::nullopt, std::nullopt, std::move(payload));
}

// ---------------------------------------------------------------- limit-seq

struct LimitSeqArgs {
  int n_max = 7;
  int k_cap = 64;
  bool strict = false;
};

void run_limit_seq(const GlobalConfig& cfg, const LimitSeqArgs& args) {
  if (args.n_max < 1) throw kfactor::DomainError("--n-max must be >= 1");
  const auto primes = kfactor::PrimeTable::build(
      kfactor::nth_prime_upper_bound(args.n_max));

  kfactor::output::Payload payload;
  payload.columns = {"n", "p_n", "stable_value", "stabilization_k", "note"};
  bool any_unstable = false;
  for (int n = 1; n <= args.n_max; ++n) {
    const auto entry = kfactor::find_stable_value(primes, n, args.k_cap);
    std::vector<Cell> cells;
    cells.emplace_back(static_cast<std::int64_t>(n));
    cells.emplace_back(
        static_cast<std::uint64_t>(primes.prime_at(static_cast<std::size_t>(n))));
    if (entry) {
      cells.emplace_back(entry->stable_value);
      cells.emplace_back(static_cast<std::int64_t>(entry->stabilization_k));
      cells.emplace_back(std::string());
    } else {
      any_unstable = true;
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::string("not stabilized within k_cap"));
    }
    payload.rows.push_back(std::move(cells));
  }
  emit(cfg, std::nullopt, std::nullopt, std::move(payload));
  if (any_unstable) {
    std::cerr << "warning: some entries did not stabilize within --k-cap\n";
    if (args.strict)
      throw kfactor::ConvergenceError("unstabilized entries with --strict");
  }
}

// ---------------------------------------------------------------- specfun

struct SpecfunArgs {
  std::string fn;
  std::vector<double> args;
};

void run_specfun(const GlobalConfig& cfg, const SpecfunArgs& args) {
  namespace sf = kfactor::specfun;
  const auto need = [&](std::size_t n) {
    if (args.args.size() != n)
      throw ArgumentError("--fn " + args.fn + " expects " + std::to_string(n) +
                          " argument(s), got " +
                          std::to_string(args.args.size()));
  };

  kfactor::output::Payload payload;
  if (args.fn == "gamma") {
    if (args.args.size() != 1 && args.args.size() != 2)
      throw ArgumentError("--fn gamma expects 1 or 2 arguments (re[,im])");
    const sf::Complex z(args.args[0],
                        args.args.size() == 2 ? args.args[1] : 0.0);
    const auto g = sf::gamma(z);
    payload.columns = {"value_re", "value_im"};
    payload.rows.push_back({Cell{g.real()}, Cell{g.imag()}});
  } else {
    double value = 0.0;
    if (args.fn == "erfc") {
      need(1);
      value = sf::erfc(args.args[0]);
    } else if (args.fn == "owens_t") {
      need(2);
      value = sf::owens_t(args.args[0], args.args[1]);
    } else if (args.fn == "li") {
      need(1);
      value = sf::li(args.args[0]);
    } else if (args.fn == "Li") {
      need(1);
      value = sf::Li(args.args[0]);
    } else if (args.fn == "li_inverse") {
      need(1);
      value = sf::li_inverse(args.args[0]);
    } else if (args.fn == "riemann_r") {
      need(1);
      value = sf::riemann_r(args.args[0]);
    } else if (args.fn == "G") {
      need(1);
      value = kfactor::estimators::selberg_G(args.args[0]);
    } else {
      throw ArgumentError("unknown --fn: " + args.fn);
    }
    payload.columns = {"value"};
    payload.rows.push_back({Cell{value}});
  }
  emit(cfg, std::nullopt, std::nullopt, std::move(payload));
}

// ---------------------------------------------------------------- sieve

struct SieveArgs {
  std::uint64_t limit = 0;
  std::string out;
};

void run_sieve(const GlobalConfig& cfg, const SieveArgs& args) {
  fs::path path;
  if (!args.out.empty()) {
    path = args.out;
  } else {
    if (cfg.cache_dir.empty())
      throw kfactor::IoError("no cache directory configured; pass --out");
    std::error_code ec;
    fs::create_directories(cfg.cache_dir, ec);
    if (ec)
      throw kfactor::IoError("cannot create cache directory " + cfg.cache_dir);
    path = cache_file_path(cfg, args.limit);
  }

  std::uint64_t checksum = 0;
  std::error_code ec;
  if (fs::exists(path, ec)) {
    try {
      checksum = kfactor::sieve_cache_checksum(path);
      note(cfg, "cache already valid: " + path.string());
      kfactor::output::Payload payload;
      payload.columns = {"file", "limit", "bytes", "checksum"};
      payload.rows.push_back({Cell{path.string()}, Cell{args.limit},
                              Cell{kfactor::sieve_cache_file_size(args.limit)},
                              Cell{checksum}});
      emit(cfg, std::nullopt, std::nullopt, std::move(payload));
      return;
    } catch (const kfactor::IoError& e) {
      note(cfg, std::string("rebuilding cache: ") + e.what());
    }
  }

  Stopwatch timer;
  const auto table = kfactor::FactorCountTable::build(args.limit);
  note(cfg, "built factor table in " + format_seconds(timer.seconds()));
  checksum = kfactor::write_sieve_cache(table, path);

  kfactor::output::Payload payload;
  payload.columns = {"file", "limit", "bytes", "checksum"};
  payload.rows.push_back({Cell{path.string()}, Cell{args.limit},
                          Cell{kfactor::sieve_cache_file_size(args.limit)},
                          Cell{checksum}});
  emit(cfg, std::nullopt, std::nullopt, std::move(payload));
}

std::string make_command_echo(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) os << ' ';
    os << argv[i];
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and estimates for k-almost primes"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  cfg.command_echo = make_command_echo(argc, argv);
  if (const char* env = std::getenv("KFACTOR_CACHE"))
    cfg.cache_dir = env;
  else
    cfg.cache_dir = "kfactor-cache";

  app.add_option("--sieve-limit", cfg.sieve_limit,
                 "largest x served by the sieve engine under --engine auto")
      ->capture_default_str();
  app.add_option("--max-prime-limit", cfg.max_prime_limit,
                 "cap on prime tables built for the recursive engine")
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "sieve cache directory (default: $KFACTOR_CACHE or ./kfactor-cache)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--verbose", cfg.verbose, "timing notes on stderr");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "exact N_k(x) or pi_k(x)");
  count->add_option("--x", count_args.x, "upper bound x")->required();
  count->add_option("--k", count_args.k, "number of prime factors")->required();
  count->add_option("--mode", count_args.mode, "big: with multiplicity, little: distinct")
      ->check(CLI::IsMember({"big", "little"}))
      ->capture_default_str();
  count->add_option("--engine", count_args.engine, "counting engine")
      ->check(CLI::IsMember({"sieve", "recursive", "auto"}))
      ->capture_default_str();

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "comparison table of estimates vs exact counts");
  table->add_option("--x", table_args.x, "upper bound x")->required();
  table->add_option("--k-max", table_args.k_max, "rows k = 1..k_max")
      ->capture_default_str();
  table->add_option("--estimators", table_args.estimators,
                    "comma list from {landau, selberg, cdf}")
      ->delimiter(',')
      ->check(CLI::IsMember({"landau", "selberg", "cdf"}));
  table->add_option("--preset", table_args.preset, "CDF constants preset")
      ->check(CLI::IsMember({"gamma", "exp-gamma", "calibrated"}))
      ->capture_default_str();
  table->add_flag("--raw", table_args.raw, "emit unrounded values");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "plot-ready series data");
  series->require_subcommand(1);
  auto* ratio = series->add_subcommand(
      "ratio", "N_k(2^(k-1) x)/pi(x) against sqrt(Li), 2 Li^(1/3), curve/R");
  auto* growth = series->add_subcommand(
      "growth", "N_k(2^(k-1) x) against the k->inf limit curve");
  auto* bounding =
      series->add_subcommand("bounding", "power-3 boundary and translation curves");
  for (auto* sub : {ratio, growth}) {
    sub->add_option("--x-max", series_args.x_max, "grid upper end")
        ->capture_default_str();
    sub->add_option("--k-range", series_args.k_range, "k range a..b");
    sub->add_option("--k", series_args.k_values, "explicit k values")
        ->delimiter(',');
    sub->add_option("--c", series_args.c, "growth constant (default e^(e+1))");
    sub->add_option("--step", series_args.step,
                    "grid step; 0 = unit steps up to 1000, else log grid");
  }
  bounding->add_option("--k-max", series_args.k_max, "rows k = 0..k_max")
      ->capture_default_str();

  LimitSeqArgs limit_args;
  auto* limit_seq =
      app.add_subcommand("limit-seq", "stabilized values of N_k(p_n 2^(k-1))");
  limit_seq->add_option("--n-max", limit_args.n_max, "prime indices 1..n_max")
      ->required();
  limit_seq->add_option("--k-cap", limit_args.k_cap, "stabilization search cap")
      ->capture_default_str();
  limit_seq->add_flag("--strict", limit_args.strict,
                      "fail when an entry does not stabilize");

  SpecfunArgs specfun_args;
  auto* specfun = app.add_subcommand("specfun", "spot-evaluate a special function");
  specfun->add_option("--fn", specfun_args.fn,
                      "one of erfc, owens_t, li, Li, li_inverse, riemann_r, gamma, G")
      ->required();
  specfun->add_option("--args", specfun_args.args, "comma-separated arguments")
      ->required()
      ->delimiter(',');

  SieveArgs sieve_args;
  auto* sieve = app.add_subcommand("sieve", "build and cache a factor table");
  sieve->add_option("--limit", sieve_args.limit, "table limit")->required();
  sieve->add_option("--out", sieve_args.out, "output file (default: cache dir)");

  // Let the global options appear after the subcommand as well.
  for (auto* sub : {count, table, series, ratio, growth, bounding, limit_seq,
                    specfun, sieve})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.sieve_limit < 100)
      throw ArgumentError("--sieve-limit must be >= 100");
    if (*count)
      run_count(cfg, count_args);
    else if (*table)
      run_table(cfg, table_args);
    else if (*ratio)
      run_series_ratio(cfg, series_args);
    else if (*growth)
      run_series_growth(cfg, series_args);
    else if (*bounding)
      run_series_bounding(cfg, series_args);
    else if (*limit_seq)
      run_limit_seq(cfg, limit_args);
    else if (*specfun)
      run_specfun(cfg, specfun_args);
    else if (*sieve)
      run_sieve(cfg, sieve_args);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const kfactor::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
