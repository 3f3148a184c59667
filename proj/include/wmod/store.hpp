#pragma once

// Append-only curve registry: one JSON object per line, keyed by the
// normalized weighted moduli point. Curves that are isomorphic over the
// algebraic closure share a key and therefore an id.
//
// Single writer, many readers. Appends hold an exclusive flock() on the store
// file while they re-check for duplicates and write.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wmod/reduction.hpp"
#include "wmod/weighted.hpp"

namespace wmod {

struct CurveRecord {
  std::string id;
  unsigned m = 2;
  unsigned d = 0;
  std::vector<Integer> form_coeffs;
  Integer twist_scalar = 1;
  WeightedPoint canonical_key;
  std::string height_decimal;
  std::size_t height_argmax = 0;
  bool minimal = false;
  std::string provenance;
  std::string created_at;
};

/// "2,4,6,10|6144,-1129584,455140848,38417279600832"
inline std::string canonical_key_string(const WeightedPoint& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + std::to_string(key.weight(i));
  out += "|";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + key[i].get_str();
  return out;
}

/// 64-bit FNV-1a of the canonical key string, 16 hex digits.
inline std::string record_id(const WeightedPoint& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_key_string(canonical)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline WeightedPoint canonical_key(const SuperellipticCurve& curve) {
  return detail::apply_sign_convention(minimal_twist(curve, true).output_point);
}

namespace detail {

inline std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::vector<std::string> to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace detail

inline CurveRecord make_record(const SuperellipticCurve& curve, std::string provenance = "") {
  WeightedPoint key = canonical_key(curve);
  const WeightedHeight h = weighted_height(key);
  CurveRecord r{record_id(key),
                curve.m(),
                curve.degree(),
                curve.form().integer_coeffs(),
                curve.twist_scalar(),
                std::move(key),
                h.decimal(),
                h.argmax_index(),
                is_minimal(curve),
                std::move(provenance),
                detail::utc_now()};
  return r;
}

inline nlohmann::json to_json(const CurveRecord& r) {
  std::vector<std::string> form;
  for (const auto& c : r.form_coeffs) form.push_back(c.get_str());
  return {{"id", r.id},
          {"m", r.m},
          {"d", r.d},
          {"form", form},
          {"twist_scalar", r.twist_scalar.get_str()},
          {"canonical_key",
           {{"weights", r.canonical_key.weights().weights()}, {"coords", detail::to_strings(r.canonical_key.coords())}}},
          {"height", {{"decimal", r.height_decimal}, {"argmax_index", r.height_argmax}}},
          {"minimal", r.minimal},
          {"provenance", r.provenance},
          {"created_at", r.created_at}};
}

inline CurveRecord record_from_json(const nlohmann::json& j) {
  std::vector<Integer> form;
  for (const auto& c : j.at("form")) form.emplace_back(c.get<std::string>());
  std::vector<Rational> coords;
  for (const auto& c : j.at("canonical_key").at("coords")) coords.push_back(parse_rational(c.get<std::string>()));
  WeightSystem weights(j.at("canonical_key").at("weights").get<std::vector<unsigned>>());
  return {j.at("id").get<std::string>(),
          j.at("m").get<unsigned>(),
          j.at("d").get<unsigned>(),
          std::move(form),
          Integer(j.at("twist_scalar").get<std::string>()),
          WeightedPoint(std::move(coords), std::move(weights)),
          j.at("height").at("decimal").get<std::string>(),
          j.at("height").at("argmax_index").get<std::size_t>(),
          j.at("minimal").get<bool>(),
          j.value("provenance", std::string()),
          j.value("created_at", std::string())};
}

/// Every record in file order. A missing file is an error.
inline std::vector<CurveRecord> db_list(const std::filesystem::path& store) {
  std::ifstream in(store);
  if (!in) throw io_error("cannot open store " + store.string() + ": " + std::strerror(errno));
  std::vector<CurveRecord> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw io_error("store " + store.string() + " line " + std::to_string(lineno) + " is corrupt: " + e.what());
    }
  }
  if (in.bad()) throw io_error("error reading store " + store.string());
  return out;
}

inline std::optional<CurveRecord> db_find(const WeightedPoint& key, const std::filesystem::path& store) {
  const WeightedPoint normalized = normalize(key);
  const std::string id = record_id(normalized);
  for (auto& r : db_list(store)) {
    if (r.id == id && r.canonical_key == normalized) return r;
  }
  return std::nullopt;
}

inline std::optional<CurveRecord> db_find(const SuperellipticCurve& curve, const std::filesystem::path& store) {
  return db_find(canonical_key(curve), store);
}

struct AddResult {
  bool added;
  /// The new record's id, or the id of the record it duplicates.
  std::string id;
};

namespace detail {

class LockedFile {
 public:
  explicit LockedFile(const std::filesystem::path& path) : fd_(::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644)) {
    if (fd_ < 0) throw io_error("cannot open store " + path.string() + ": " + std::strerror(errno));
    if (::flock(fd_, LOCK_EX) != 0) {
      const int err = errno;
      ::close(fd_);
      throw io_error("cannot lock store " + path.string() + ": " + std::strerror(err));
    }
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;
  ~LockedFile() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }

  void append(const std::string& data) {
    std::size_t done = 0;
    while (done < data.size()) {
      const ssize_t n = ::write(fd_, data.data() + done, data.size() - done);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw io_error(std::string("write to store failed: ") + std::strerror(errno));
      }
      done += static_cast<std::size_t>(n);
    }
  }

 private:
  int fd_;
};

}  // namespace detail

/// Appends the record unless its canonical key is already stored. The file is
/// created when absent.
inline AddResult db_add(const CurveRecord& record, const std::filesystem::path& store) {
  detail::LockedFile file(store);
  for (const auto& existing : db_list(store)) {
    if (existing.canonical_key == record.canonical_key) return {false, existing.id};
  }
  file.append(to_json(record).dump() + "\n");
  return {true, record.id};
}

}  // namespace wmod
