#pragma once

// Character-degree tables supplied as data (sporadic groups, the Tits group,
// small Lie-type groups, constructed examples), the ratio
// rat(G) = b(G)/c(G), and data-driven exponent checks.
//
// TSV, one group per line, '#' starts a comment line:
//
//   name <TAB> order <TAB> degrees <TAB> out_order <TAB> alpha,beta <TAB> fitting_index [<TAB> degrees_complete]
//
// Empty fields are allowed for the optional columns (everything except name
// and degrees). Degrees are comma separated and may use the exponent syntax
// "1^3,10" for repeats. degrees_complete is 1 (default) when the degree field
// is the whole multiset and 0 when it lists only some degrees.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chardeg/exact_arith.hpp"

namespace chardeg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtendiblePair {
  Natural alpha;
  Natural beta;

  bool operator==(const ExtendiblePair&) const = default;
};

struct DegreeTable {
  std::string name;
  std::optional<Natural> order;
  std::vector<Natural> degrees;  // sorted ascending, duplicates kept
  std::optional<Natural> out_order;
  std::optional<ExtendiblePair> extendible_pair;
  std::optional<Natural> fitting_index;
  bool degrees_complete = true;

  /// Throws ValidationError when 1 is missing, a degree is 0, or the pair is
  /// not among the degrees.
  void validate() const;

  bool operator==(const DegreeTable&) const = default;
};

/// Parses one TSV record. `line_number` is used in error messages.
DegreeTable parse_table_line(const std::string& line, std::size_t line_number);

/// All records in a TSV stream; comment and blank lines are skipped.
std::vector<DegreeTable> parse_tables(std::istream& in);

/// The single record in the stream. Throws ParseError if there is not exactly one.
DegreeTable parse_table(std::istream& in);

std::string serialize(const DegreeTable& table);

nlohmann::json to_json(const DegreeTable& table);
DegreeTable table_from_json(const nlohmann::json& j);

/// Loads every *.tsv and *.json file in a directory, sorted by file name.
std::vector<DegreeTable> load_data_dir(const std::filesystem::path& dir);

/// Largest degree.
Natural max_degree(const DegreeTable& table);

/// Smallest degree > 1, nullopt if every degree is 1.
std::optional<Natural> min_nonlinear_degree(const DegreeTable& table);

/// b/c, or 1 when there is no nonlinear degree.
Rational rat(const DegreeTable& table);

enum class PairStatus { passed, failed, unchecked, rejected };

std::string to_string(PairStatus s);

struct PairReport {
  std::string name;
  PairStatus status = PairStatus::unchecked;
  std::optional<Natural> alpha;
  std::optional<Natural> beta;
  std::optional<Natural> order;
  std::string note;
};

/// alpha^14 > beta^14 * |S| for the table's asserted extendible pair.
/// Missing order or pair gives `unchecked`; beta < 2 or a pair outside the
/// degree list gives `rejected`.
PairReport check_sporadic_pair(const DegreeTable& table);

/// x <= y^(num/den), decided as x^den <= y^num. Requires den >= 1.
bool check_exponent_bound(const Natural& x, const Natural& y, std::uint64_t num,
                          std::uint64_t den);

struct DataIssue {
  std::string name;
  std::string problem;
};

/// Cross-table checks: unique names, out_order >= 1, and for complete tables
/// with an order, sum of squared degrees == order.
std::vector<DataIssue> audit_tables(const std::vector<DegreeTable>& tables);

nlohmann::json to_json(const PairReport& report);

}  // namespace chardeg
