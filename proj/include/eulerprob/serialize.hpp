#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "eulerprob/eulerpoly.hpp"
#include "eulerprob/identities.hpp"
#include "eulerprob/probnum.hpp"
#include "eulerprob/stochastic.hpp"

namespace eulerprob {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ProbTable& table);
nlohmann::json to_json(const CrossValidationReport& report);
nlohmann::json to_json(const PolyInX& poly);
nlohmann::json to_json(const ReconstructionResult& result);
nlohmann::json to_json(const MomentReport& report);
nlohmann::json to_json(const CatalanPrefixReport& report);
nlohmann::json to_json(const CatalanGfReport& report);

/// RFC 4180 CSV: header row, CRLF line endings, fields quoted when needed.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(std::vector<std::string> fields);
  std::string str() const;

 private:
  static std::string escape(const std::string& field);
  std::string out_;
  std::size_t columns_;
};

/// Columns: ell, exact, float. Trig tables leave `exact` empty.
std::string to_csv(const ProbTable& table);
/// Columns: power, exact, float.
std::string to_csv(const PolyInX& poly);
/// Columns: label, empirical, standard_error, reference, standardized_deviation.
std::string to_csv(const MomentReport& report);

/// Shortest round-trip decimal for a double.
std::string format_double(double value);

}  // namespace eulerprob
