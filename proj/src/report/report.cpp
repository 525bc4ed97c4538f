#include "scissors/report/report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "scissors/exact/error.hpp"

namespace scissors::report {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    fail(ErrorKind::InvariantViolation, "sha256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

void record_input(Report& r, const std::string& name, const std::string& content) {
  r.inputs[name] = json{{"sha256", sha256_hex(content)}};
}

std::string read_input(Report& r, const std::string& name, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  record_input(r, name, s);
  r.inputs[name]["path"] = path;
  return s;
}

json report_body(const Report& r) {
  json inputs = r.inputs;
  return json{{"schema_version", kSchemaVersion},
              {"command", r.command},
              {"args", r.args},
              {"seed", r.seed},
              {"inputs", inputs},
              {"inputs_digest", sha256_hex(inputs.dump())},
              {"results", r.results},
              {"certificates", r.certificates},
              {"status", r.status}};
}

std::string report_digest(const Report& r) { return sha256_hex(report_body(r).dump()); }

json report_json(const Report& r) {
  json j = report_body(r);
  j["digest"] = report_digest(r);
  j["timing"] = json{{"ms", r.timing_ms}};
  return j;
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(10) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

bool flat(const json& v) {
  if (v.is_primitive()) return true;
  if (v.is_array()) {
    for (const auto& x : v)
      if (!x.is_primitive()) return false;
    return true;
  }
  return false;
}

std::string inline_value(const json& v) {
  if (!v.is_array()) return scalar(v);
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
  return s + ")";
}

// array of objects with flat fields -> aligned columns
bool tabular(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object()) return false;
    for (const auto& [k, x] : row.items())
      if (!flat(x)) return false;
  }
  return true;
}

void table(std::ostream& os, const json& rows, const std::string& pad) {
  std::vector<std::string> cols;
  std::set<std::string> seen;
  for (const auto& row : rows)
    for (const auto& [k, x] : row.items())
      if (seen.insert(k).second) cols.push_back(k);
  std::vector<size_t> w(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (size_t c = 0; c < cols.size(); ++c) w[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? inline_value(row[cols[c]]) : "");
      w[c] = std::max(w[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << pad;
    for (size_t c = 0; c < line.size(); ++c) {
      if (c + 1 == line.size()) {
        os << line[c];
        break;
      }
      os << std::left << std::setw(static_cast<int>(w[c])) << line[c] << "  ";
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(std::ostream& os, const json& v, const std::string& pad) {
  for (const auto& [k, x] : v.items()) {
    if (flat(x)) {
      os << pad << k << ": " << inline_value(x) << "\n";
    } else if (tabular(x)) {
      os << pad << k << ":\n";
      table(os, x, pad + "  ");
    } else if (x.is_object()) {
      os << pad << k << ":\n";
      render(os, x, pad + "  ");
    } else {
      os << pad << k << ":\n";
      for (size_t i = 0; i < x.size(); ++i) {
        os << pad << "  [" << i << "]\n";
        if (x[i].is_object())
          render(os, x[i], pad + "    ");
        else
          os << pad << "    " << x[i].dump() << "\n";
      }
    }
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "seed: " << r.seed << "\n";
  render(os, r.results, "");
  if (!r.certificates.empty()) os << "certificates: " << r.certificates.size() << " (see --format json)\n";
  os << "digest: " << report_digest(r) << "\n";
  return os.str();
}

}  // namespace scissors::report
