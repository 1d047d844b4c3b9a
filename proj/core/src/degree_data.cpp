#include "chardeg/degree_data.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace chardeg {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

void DegreeTable::validate() const {
  if (degrees.empty()) throw ValidationError(name + ": empty degree list");
  for (const Natural& d : degrees) {
    if (d < 1) throw ValidationError(name + ": degrees must be >= 1");
  }
  if (!std::binary_search(degrees.begin(), degrees.end(), Natural(1))) {
    throw ValidationError(name + ": degree list must contain 1");
  }
  if (extendible_pair) {
    for (const Natural* d : {&extendible_pair->alpha, &extendible_pair->beta}) {
      if (!std::binary_search(degrees.begin(), degrees.end(), *d)) {
        throw ValidationError(name + ": pair degree " + to_string(*d) +
                              " is not in the degree list");
      }
    }
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \r\n");
  return s.substr(first, last - first + 1);
}

Natural field_natural(const std::string& text, std::size_t line, const char* what) {
  try {
    return parse_natural(trim(text));
  } catch (const std::invalid_argument&) {
    throw ParseError(line, std::string("bad ") + what + " '" + text + "'");
  }
}

std::optional<Natural> optional_natural(const std::string& text, std::size_t line,
                                        const char* what) {
  if (trim(text).empty()) return std::nullopt;
  return field_natural(text, line, what);
}

std::vector<Natural> parse_degrees(const std::string& text, std::size_t line) {
  std::vector<Natural> out;
  if (trim(text).empty()) throw ParseError(line, "empty degrees field");
  for (const std::string& raw : split(text, ',')) {
    const std::string token = trim(raw);
    const auto caret = token.find('^');
    const Natural value = field_natural(token.substr(0, caret), line, "degree");
    std::uint64_t count = 1;
    if (caret != std::string::npos) {
      const Natural c = field_natural(token.substr(caret + 1), line, "multiplicity");
      if (!c.fits_ulong_p() || c == 0) throw ParseError(line, "bad multiplicity in '" + token + "'");
      count = c.get_ui();
    }
    out.insert(out.end(), count, value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string degrees_to_string(const std::vector<Natural>& degrees) {
  std::string out;
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!out.empty()) out += ',';
    out += to_string(degrees[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string opt_string(const std::optional<Natural>& v) { return v ? to_string(*v) : ""; }

}  // namespace

DegreeTable parse_table_line(const std::string& line, std::size_t line_number) {
  const std::vector<std::string> fields = split(line, '\t');
  if (fields.size() < 3) {
    throw ParseError(line_number, "expected at least name, order and degrees columns");
  }
  DegreeTable t;
  t.name = trim(fields[0]);
  if (t.name.empty()) throw ParseError(line_number, "empty name");
  t.order = optional_natural(fields[1], line_number, "order");
  t.degrees = parse_degrees(fields[2], line_number);
  if (fields.size() > 3) t.out_order = optional_natural(fields[3], line_number, "out_order");
  if (fields.size() > 4 && !trim(fields[4]).empty()) {
    const auto parts = split(trim(fields[4]), ',');
    if (parts.size() != 2) throw ParseError(line_number, "pair must be 'alpha,beta'");
    t.extendible_pair = ExtendiblePair{field_natural(parts[0], line_number, "alpha"),
                                       field_natural(parts[1], line_number, "beta")};
  }
  if (fields.size() > 5) t.fitting_index = optional_natural(fields[5], line_number, "fitting_index");
  if (fields.size() > 6 && !trim(fields[6]).empty()) {
    const std::string flag = trim(fields[6]);
    if (flag != "0" && flag != "1") throw ParseError(line_number, "degrees_complete must be 0 or 1");
    t.degrees_complete = flag == "1";
  }
  // Further columns are tolerated and ignored.
  try {
    t.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line_number) + ": " + e.what());
  }
  return t;
}

std::vector<DegreeTable> parse_tables(std::istream& in) {
  std::vector<DegreeTable> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_table_line(line, number));
  }
  return out;
}

DegreeTable parse_table(std::istream& in) {
  auto tables = parse_tables(in);
  if (tables.size() != 1) {
    throw ParseError(0, "expected exactly one table, found " + std::to_string(tables.size()));
  }
  return std::move(tables.front());
}

std::string serialize(const DegreeTable& t) {
  std::string pair;
  if (t.extendible_pair) {
    pair = to_string(t.extendible_pair->alpha) + "," + to_string(t.extendible_pair->beta);
  }
  return t.name + "\t" + opt_string(t.order) + "\t" + degrees_to_string(t.degrees) + "\t" +
         opt_string(t.out_order) + "\t" + pair + "\t" + opt_string(t.fitting_index) + "\t" +
         (t.degrees_complete ? "1" : "0");
}

nlohmann::json to_json(const DegreeTable& t) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const Natural& d : t.degrees) degrees.push_back(to_string(d));
  nlohmann::json j{{"name", t.name}, {"degrees", degrees}, {"degrees_complete", t.degrees_complete}};
  j["order"] = t.order ? nlohmann::json(to_string(*t.order)) : nlohmann::json(nullptr);
  j["out_order"] = t.out_order ? nlohmann::json(to_string(*t.out_order)) : nlohmann::json(nullptr);
  if (t.extendible_pair) {
    j["alpha"] = to_string(t.extendible_pair->alpha);
    j["beta"] = to_string(t.extendible_pair->beta);
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  j["fitting_index"] =
      t.fitting_index ? nlohmann::json(to_string(*t.fitting_index)) : nlohmann::json(nullptr);
  return j;
}

namespace {

Natural json_natural(const nlohmann::json& v, const char* what) {
  if (v.is_string()) return parse_natural(v.get<std::string>());
  if (v.is_number_unsigned()) return Natural(std::to_string(v.get<std::uint64_t>()));
  throw ValidationError(std::string("bad ") + what + " in JSON table");
}

std::optional<Natural> json_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return json_natural(j.at(key), key);
}

}  // namespace

DegreeTable table_from_json(const nlohmann::json& j) {
  DegreeTable t;
  t.name = j.at("name").get<std::string>();
  t.order = json_optional(j, "order");
  for (const auto& d : j.at("degrees")) t.degrees.push_back(json_natural(d, "degree"));
  std::sort(t.degrees.begin(), t.degrees.end());
  t.out_order = json_optional(j, "out_order");
  auto alpha = json_optional(j, "alpha");
  auto beta = json_optional(j, "beta");
  if (alpha.has_value() != beta.has_value()) {
    throw ValidationError(t.name + ": alpha and beta must be given together");
  }
  if (alpha) t.extendible_pair = ExtendiblePair{*alpha, *beta};
  t.fitting_index = json_optional(j, "fitting_index");
  if (j.contains("degrees_complete")) t.degrees_complete = j.at("degrees_complete").get<bool>();
  t.validate();
  return t;
}

std::vector<DegreeTable> load_data_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("data directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".tsv" || ext == ".json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<DegreeTable> out;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    try {
      if (file.extension() == ".tsv") {
        auto tables = parse_tables(in);
        out.insert(out.end(), tables.begin(), tables.end());
      } else {
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.is_array()) {
          for (const auto& item : j) out.push_back(table_from_json(item));
        } else {
          out.push_back(table_from_json(j));
        }
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(file.filename().string() + ": " + e.what());
    }
  }
  return out;
}

Natural max_degree(const DegreeTable& table) {
  return table.degrees.empty() ? Natural(1) : table.degrees.back();
}

std::optional<Natural> min_nonlinear_degree(const DegreeTable& table) {
  auto it = std::upper_bound(table.degrees.begin(), table.degrees.end(), Natural(1));
  if (it == table.degrees.end()) return std::nullopt;
  return *it;
}

Rational rat(const DegreeTable& table) {
  const auto c = min_nonlinear_degree(table);
  if (!c) return Rational(1);
  return make_rational(max_degree(table), *c);
}

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::passed: return "passed";
    case PairStatus::failed: return "failed";
    case PairStatus::unchecked: return "unchecked";
    case PairStatus::rejected: return "rejected";
  }
  return "unchecked";
}

PairReport check_sporadic_pair(const DegreeTable& table) {
  PairReport r;
  r.name = table.name;
  r.order = table.order;
  if (table.extendible_pair) {
    r.alpha = table.extendible_pair->alpha;
    r.beta = table.extendible_pair->beta;
  }
  if (!table.order || !table.extendible_pair) {
    r.status = PairStatus::unchecked;
    r.note = "order or extendible pair missing";
    return r;
  }
  const Natural& alpha = table.extendible_pair->alpha;
  const Natural& beta = table.extendible_pair->beta;
  if (beta < 2 || alpha < 2) {
    r.status = PairStatus::rejected;
    r.note = "pair must consist of non-principal characters (degree >= 2)";
    return r;
  }
  const auto& d = table.degrees;
  if (!std::binary_search(d.begin(), d.end(), alpha) || !std::binary_search(d.begin(), d.end(), beta)) {
    r.status = PairStatus::rejected;
    r.note = "pair degrees not in the degree list";
    return r;
  }
  const bool holds = cmp_power(make_rational(alpha, beta), 14, Rational(*table.order), 1) > 0;
  r.status = holds ? PairStatus::passed : PairStatus::failed;
  r.note = "extendibility asserted by data";
  return r;
}

bool check_exponent_bound(const Natural& x, const Natural& y, std::uint64_t num,
                          std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("check_exponent_bound: den must be >= 1");
  return cmp_power(Rational(x), den, Rational(y), num) <= 0;
}

std::vector<DataIssue> audit_tables(const std::vector<DegreeTable>& tables) {
  std::vector<DataIssue> issues;
  std::set<std::string> seen;
  for (const DegreeTable& t : tables) {
    if (!seen.insert(t.name).second) issues.push_back({t.name, "duplicate name"});
    try {
      t.validate();
    } catch (const ValidationError& e) {
      issues.push_back({t.name, e.what()});
    }
    if (t.out_order && *t.out_order < 1) issues.push_back({t.name, "out_order must be >= 1"});
    if (t.degrees_complete && t.order) {
      Natural sum = 0;
      for (const Natural& d : t.degrees) sum += d * d;
      if (sum != *t.order) {
        issues.push_back({t.name, "sum of squared degrees " + to_string(sum) +
                                      " differs from order " + to_string(*t.order)});
      }
    }
  }
  return issues;
}

nlohmann::json to_json(const PairReport& r) {
  auto opt = [](const std::optional<Natural>& v) {
    return v ? nlohmann::json(to_string(*v)) : nlohmann::json(nullptr);
  };
  return nlohmann::json{{"name", r.name},     {"status", to_string(r.status)},
                        {"alpha", opt(r.alpha)}, {"beta", opt(r.beta)},
                        {"order", opt(r.order)}, {"note", r.note}};
}

}  // namespace chardeg
