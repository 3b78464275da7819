#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "specht/field.hpp"

namespace specht {

// field selector as it appears on the command line: "rational" or "fp:<p>"
struct FieldSpec {
  bool rational = true;
  std::uint32_t p = 0;

  static FieldSpec parse(const std::string& text);
  std::string name() const { return rational ? "rational" : "fp:" + std::to_string(p); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct RunConfig {
  std::vector<int> e_list{3};
  std::vector<std::array<int, 2>> kappa_list;  // empty with kappa_all: every pair mod e
  bool kappa_all = false;
  int n_min = 2;
  int n_max = 6;
  std::vector<int> m_list;  // empty: all 0..n
  FieldSpec field;
  std::uint64_t seed = 0;
  std::string output_path;  // empty: stdout
  std::string format = "json";
  std::string cache_path;  // empty: no cache
  int n_guard = 14;
  int jobs = 1;
};

// One check outcome.  m = -1 marks tower-level checks (exactness,
// compositions) that belong to a whole (e, kappa, n) rather than one m.
struct ReportRecord {
  int e = 0;
  int kappa1 = 0;
  int kappa2 = 0;
  int n = 0;
  int m = 0;
  std::string field;
  std::string check;
  std::string status;  // pass | fail | skipped
  std::string details;
  double timing_ms = 0.0;
};

std::string records_to_json(const RunConfig& config, const std::vector<ReportRecord>& records);
std::string records_to_csv(const std::vector<ReportRecord>& records);

int count_failures(const std::vector<ReportRecord>& records);
const ReportRecord* first_failure(const std::vector<ReportRecord>& records);

// FNV-1a over a canonical serialization; used for cache fingerprints
class Fingerprint {
 public:
  void feed(const std::string& s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    feed_sep();
  }
  void feed(long v) { feed(std::to_string(v)); }
  std::uint64_t value() const { return h_; }
  std::string hex() const;

 private:
  void feed_sep() {
    h_ ^= 0x1f;
    h_ *= 0x100000001b3ULL;
  }
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

/*
 * Result cache: one JSON file per (e, kappa, n, m, field) under the cache
 * directory, holding the generator-matrix fingerprint and the records the
 * checks produced.  Entries are replayed only when the freshly computed
 * fingerprint matches, so stale entries invalidate themselves.
 */
struct CacheEntry {
  std::string fingerprint;
  std::vector<ReportRecord> records;
};

class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  // key: canonical "e=..,k=..,n=..,m=..,field=.." string
  bool load(const std::string& key, CacheEntry& out) const;
  void store(const std::string& key, const CacheEntry& entry) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

std::string cache_key(int e, int k1, int k2, int n, int m, const std::string& field);

}  // namespace specht
