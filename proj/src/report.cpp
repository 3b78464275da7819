#include "specht/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace specht {

using nlohmann::json;

FieldSpec FieldSpec::parse(const std::string& text) {
  FieldSpec spec;
  if (text == "rational") return spec;
  if (text.rfind("fp:", 0) == 0) {
    spec.rational = false;
    try {
      unsigned long p = std::stoul(text.substr(3));
      spec.p = static_cast<std::uint32_t>(p);
    } catch (const std::exception&) {
      throw std::invalid_argument("field: expected rational or fp:<prime>");
    }
    Fp::Context ctx(spec.p);  // validates primality
    (void)ctx;
    return spec;
  }
  throw std::invalid_argument("field: expected rational or fp:<prime>");
}

namespace {

json record_to_json(const ReportRecord& r) {
  json j;
  j["params"] = {{"e", r.e}, {"kappa", {r.kappa1, r.kappa2}}, {"n", r.n}, {"m", r.m}};
  j["field"] = r.field;
  j["check"] = r.check;
  j["status"] = r.status;
  j["details"] = r.details;
  j["timing_ms"] = r.timing_ms;
  return j;
}

}  // namespace

std::string records_to_json(const RunConfig& config, const std::vector<ReportRecord>& records) {
  json j;
  j["schema"] = 1;
  json cfg;
  cfg["e_list"] = config.e_list;
  json kl = json::array();
  for (const auto& k : config.kappa_list) kl.push_back({k[0], k[1]});
  cfg["kappa_list"] = config.kappa_all ? json("all") : json(kl);
  cfg["n_range"] = {config.n_min, config.n_max};
  cfg["m_list"] = config.m_list.empty() ? json("all") : json(config.m_list);
  cfg["field"] = config.field.name();
  cfg["seed"] = config.seed;
  j["config"] = cfg;
  json recs = json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : records) {
    recs.push_back(record_to_json(r));
    if (r.status == "pass") ++pass;
    if (r.status == "fail") ++fail;
    if (r.status == "skipped") ++skipped;
  }
  j["records"] = recs;
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string records_to_csv(const std::vector<ReportRecord>& records) {
  std::ostringstream os;
  os << "e,kappa1,kappa2,n,m,field,check,status,details,timing_ms\n";
  for (const auto& r : records) {
    os << r.e << ',' << r.kappa1 << ',' << r.kappa2 << ',' << r.n << ',' << r.m << ','
       << r.field << ',' << r.check << ',' << r.status << ',' << csv_escape(r.details) << ','
       << r.timing_ms << '\n';
  }
  return os.str();
}

int count_failures(const std::vector<ReportRecord>& records) {
  int fails = 0;
  for (const auto& r : records)
    if (r.status == "fail") ++fails;
  return fails;
}

const ReportRecord* first_failure(const std::vector<ReportRecord>& records) {
  for (const auto& r : records)
    if (r.status == "fail") return &r;
  return nullptr;
}

std::string Fingerprint::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  std::uint64_t v = h_;
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string cache_key(int e, int k1, int k2, int n, int m, const std::string& field) {
  std::ostringstream os;
  os << "e" << e << "_k" << k1 << "-" << k2 << "_n" << n << "_m" << m << "_" << field;
  return os.str();
}

std::string ResultCache::path_for(const std::string& key) const {
  return dir_ + "/" + key + ".json";
}

bool ResultCache::load(const std::string& key, CacheEntry& out) const {
  if (!enabled()) return false;
  std::ifstream in(path_for(key));
  if (!in) return false;
  json j;
  try {
    in >> j;
    out.fingerprint = j.at("fingerprint").get<std::string>();
    out.records.clear();
    for (const auto& rj : j.at("records")) {
      ReportRecord r;
      r.e = rj.at("params").at("e").get<int>();
      r.kappa1 = rj.at("params").at("kappa").at(0).get<int>();
      r.kappa2 = rj.at("params").at("kappa").at(1).get<int>();
      r.n = rj.at("params").at("n").get<int>();
      r.m = rj.at("params").at("m").get<int>();
      r.field = rj.at("field").get<std::string>();
      r.check = rj.at("check").get<std::string>();
      r.status = rj.at("status").get<std::string>();
      r.details = rj.at("details").get<std::string>();
      r.timing_ms = rj.at("timing_ms").get<double>();
      out.records.push_back(std::move(r));
    }
  } catch (const std::exception&) {
    return false;  // unreadable entries are treated as misses
  }
  return true;
}

void ResultCache::store(const std::string& key, const CacheEntry& entry) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  json j;
  j["fingerprint"] = entry.fingerprint;
  json recs = json::array();
  for (const auto& r : entry.records) recs.push_back(record_to_json(r));
  j["records"] = recs;
  std::ofstream out(path_for(key));
  out << j.dump(2) << "\n";
}

}  // namespace specht
