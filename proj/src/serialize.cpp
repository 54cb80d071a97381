#include "eulerprob/serialize.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace eulerprob {

using nlohmann::json;

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

json to_json(const ProbTable& table) {
  json values = json::array();
  for (int ell = 0; ell <= table.max_ell; ++ell) {
    const auto i = static_cast<std::size_t>(ell);
    json row{{"ell", ell}, {"float", table.approx[i]}};
    if (table.is_exact()) row["exact"] = to_string(table.exact[i]);
    values.push_back(std::move(row));
  }
  return json{{"N", table.N},
              {"max_ell", table.max_ell},
              {"method", std::string(to_string(table.method))},
              {"tail_bound", table.tail_bound},
              {"values", std::move(values)}};
}

json to_json(const CrossValidationReport& report) {
  return json{{"N", report.N},
              {"max_ell", report.max_ell},
              {"max_trig_deviation", report.max_trig_deviation},
              {"worst_ell", report.worst_ell},
              {"passed", report.passed}};
}

json to_json(const PolyInX& poly) {
  json coeffs = json::array();
  for (const auto& c : poly.coefficients()) coeffs.push_back(json{{"exact", to_string(c)}, {"float", to_double(c)}});
  return json{{"degree", poly.degree()}, {"order", poly.order}, {"coefficients", std::move(coeffs)}};
}

json to_json(const ReconstructionResult& r) {
  return json{{"n", r.n},
              {"N", r.N},
              {"x", to_string(r.x)},
              {"terms_used", r.terms_used},
              {"last_k", r.last_k},
              {"partial_value", to_string(r.partial_value)},
              {"partial_value_float", to_double(r.partial_value)},
              {"target", to_string(r.target)},
              {"target_float", to_double(r.target)},
              {"abs_error", r.abs_error},
              {"tail_estimate", r.tail_estimate},
              {"first_small_term_k", r.first_small_term_k}};
}

json to_json(const MomentReport& report) {
  json est = json::array();
  for (const auto& e : report.estimates) {
    est.push_back(json{{"label", e.label},
                       {"empirical", e.empirical},
                       {"standard_error", e.standard_error},
                       {"reference", e.reference},
                       {"standardized_deviation", finite_or_string(e.standardized_deviation)}});
  }
  json j{{"sample_size", report.sample_size},
         {"estimates", std::move(est)},
         {"max_standardized_deviation", finite_or_string(report.max_standardized_deviation)},
         {"residual_events", report.residual_events}};
  if (report.ks) {
    j["ks"] = json{{"statistic", report.ks->statistic},
                   {"critical_value_1pct", report.ks->critical_value},
                   {"passed", report.ks->passed()}};
  }
  return j;
}

json to_json(const CatalanPrefixReport& report) {
  json mism = json::array();
  for (const auto& m : report.mismatches) {
    mism.push_back(json{{"k", m.k}, {"q", to_string(m.q_value)}, {"convolution", to_string(m.convolution_value)}});
  }
  return json{{"N", report.N},
              {"prefix_checked", report.prefix_checked},
              {"mismatches", std::move(mism)},
              {"valuation", report.valuation},
              {"expected_valuation", 3 * report.N},
              {"leading_difference", to_string(report.leading_difference)},
              {"passed", report.passed}};
}

json to_json(const CatalanGfReport& report) {
  json res = json::array();
  for (const auto& v : report.residual) res.push_back(to_string(v));
  return json{{"order", report.order}, {"residual", std::move(res)}, {"passed", report.passed}};
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) { add_row(std::move(header)); }

std::string CsvWriter::escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvWriter::add_row(std::vector<std::string> fields) {
  if (fields.size() != columns_) throw std::invalid_argument("CsvWriter: row width does not match header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ += ',';
    out_ += escape(fields[i]);
  }
  out_ += "\r\n";
}

std::string CsvWriter::str() const { return out_; }

std::string to_csv(const ProbTable& table) {
  CsvWriter w({"ell", "exact", "float"});
  for (int ell = 0; ell <= table.max_ell; ++ell) {
    const auto i = static_cast<std::size_t>(ell);
    w.add_row({std::to_string(ell), table.is_exact() ? to_string(table.exact[i]) : "", format_double(table.approx[i])});
  }
  return w.str();
}

std::string to_csv(const PolyInX& poly) {
  CsvWriter w({"power", "exact", "float"});
  const auto& c = poly.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) w.add_row({std::to_string(k), to_string(c[k]), format_double(to_double(c[k]))});
  return w.str();
}

std::string to_csv(const MomentReport& report) {
  CsvWriter w({"label", "empirical", "standard_error", "reference", "standardized_deviation"});
  for (const auto& e : report.estimates) {
    w.add_row({e.label, format_double(e.empirical), format_double(e.standard_error), format_double(e.reference),
               format_double(e.standardized_deviation)});
  }
  return w.str();
}

}  // namespace eulerprob
