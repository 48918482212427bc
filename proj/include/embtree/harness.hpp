#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "embtree/series.hpp"

namespace embtree {

// ---- OEIS ----

enum class OeisSource { bundled_fixture, fetched };

struct OeisRecord {
  std::string id;
  long offset = 0;
  std::vector<mpz_class> terms;
  OeisSource source = OeisSource::bundled_fixture;
};

// "n a(n)" per line; '#' comments and blank lines skipped; indices must be consecutive.
OeisRecord parse_bfile(std::string_view text, const std::string& id, OeisSource source);

const std::vector<OeisRecord>& oeis_fixtures();
const OeisRecord& oeis_fixture(const std::string& id);

// Fixtures whose terms agree with the series after dropping leading zeros on both sides.
std::vector<std::string> oeis_match(const TruncatedSeries& s, std::size_t min_terms = 8);

struct FetchOptions {
  bool allow_network = false;
  std::string host = "https://oeis.org";
  int timeout_s = 20;
};
OeisRecord oeis_fetch(const std::string& id, const FetchOptions& opt);

// ---- export / cache ----

enum class ExportFormat { json, csv };
ExportFormat parse_format(std::string_view s);
std::string export_series(const TruncatedSeries& s, ExportFormat f);
TruncatedSeries import_series(std::string_view text, ExportFormat f);

std::string cache_key(std::string_view module, std::string_view operation, std::string_view params,
                      std::size_t order);

class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);
  std::optional<TruncatedSeries> get(const std::string& canonical) const;  // nullopt on miss
  void put(const std::string& canonical, const TruncatedSeries& s) const;
  // get, else compute and put
  TruncatedSeries fetch_or(const std::string& canonical, const std::function<TruncatedSeries()>& compute) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path file_for(const std::string& canonical) const;
  std::filesystem::path dir_;
};

// ---- campaign ----

enum class CheckStatus { pass, fail, conjecture_consistent };
std::string to_string(CheckStatus s);

struct CheckOutcome {
  bool ok = false;
  std::string detail;
};

struct CheckSpec {
  std::string id;      // suite.name
  std::string suite;
  std::string anchor;  // statement or oracle pairing under test
  int criterion = 0;   // acceptance criterion number, 0 if none
  bool conjecture = false;
  long time_limit_ms = 0;
  std::function<CheckOutcome(std::size_t order_override)> run;
};

const std::vector<CheckSpec>& check_registry();

struct CheckResult {
  std::string id, suite, anchor;
  int criterion = 0;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  long runtime_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // sorted by id
  bool failed() const;              // any non-conjecture failure
  std::string to_json(bool with_timing = true) const;
};

struct CampaignConfig {
  std::vector<std::string> suites;  // empty = all
  std::size_t order = 0;            // 0 = per-check defaults
  unsigned jobs = 1;
  std::string cache_dir;
};

CampaignConfig parse_campaign_config(std::string_view text);
CampaignConfig load_campaign_config(const std::filesystem::path& file);
// EMBTREE_SUITES, EMBTREE_ORDER, EMBTREE_JOBS, EMBTREE_CACHE_DIR
void apply_env_overrides(CampaignConfig& c);

CheckResult run_check(const CheckSpec& spec, std::size_t order_override);
VerificationReport run_campaign(const CampaignConfig& config);

}  // namespace embtree
