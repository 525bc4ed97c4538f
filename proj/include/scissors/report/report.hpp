#pragma once
#include <json.hpp>
#include <optional>
#include <string>

#include "scissors/dehn/tensor.hpp"

namespace scissors::report {

inline constexpr int kSchemaVersion = 1;

struct Options {
  uint64_t seed = 0;
  std::optional<int> cases;
  std::optional<int> max_degree;
  long height_bound = dehn::kDefaultHeightBound;
  bool exact_strict = false;
  bool recheck = false;
};

// Exit status of an evaluation that ran to completion but whose property
// check failed (a suite case, a certificate recheck).
inline constexpr int kCheckFailed = 1;

struct Report {
  std::string command;
  nlohmann::json args = nlohmann::json::object();    // flag echo
  nlohmann::json inputs = nlohmann::json::object();  // name -> {path?, sha256}
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::array();
  uint64_t seed = 0;
  double timing_ms = 0;
  int status = 0;
};

std::string sha256_hex(const std::string& bytes);
// reads a file, recording its content hash under `name`; ParseError when unreadable
std::string read_input(Report& r, const std::string& name, const std::string& path);
void record_input(Report& r, const std::string& name, const std::string& content);

// everything except timing; the digest covers exactly this object
nlohmann::json report_body(const Report& r);
std::string report_digest(const Report& r);
// body + "digest" + "timing"
nlohmann::json report_json(const Report& r);
// aligned text view of report_json
std::string render_text(const Report& r);

}  // namespace scissors::report
