#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "carries/carries_matrix.hpp"
#include "carries/foulkes.hpp"
#include "carries/idempotents.hpp"
#include "carries/matrix.hpp"
#include "carries/permutation.hpp"
#include "carries/rational.hpp"
#include "carries/shuffle_stats.hpp"
#include "carries/verify.hpp"

namespace carries {

using json = nlohmann::ordered_json;

/// Bumped whenever any payload layout changes.
inline constexpr const char* kSchemaVersion = "1.0.0";

/// Exact rationals travel as decimal strings, never as floats; decimal
/// approximations, where offered, sit in separate clearly-named fields.
inline json rational_json(const Rational& q) {
  return json{{"num", q.num().get_str()}, {"den", q.den().get_str()}};
}

/// Deterministic float rendering for CSV (17 significant digits round-trips
/// any double exactly).
inline std::string float_repr(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline json matrix_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json int_matrix_json(const Matrix<Int>& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json distribution_json(const Distribution& d) {
  json out = json::array();
  for (int i = 0; i < d.size(); ++i) out.push_back(rational_json(d[i]));
  return out;
}

/// Character table with ascending column index j spelled out explicitly
/// (the flipped display order is a human-output convention only).
inline json foulkes_json(const FoulkesTable& t) {
  const int n = t.n();
  json columns = json::array();
  for (int j = 1; j <= n; ++j) columns.push_back(j);
  json rows = json::array();
  for (int k = 0; k < n; ++k) {
    json values = json::array();
    for (int j = 1; j <= n; ++j) values.push_back(t.value(k, j).get_str());
    rows.push_back(json{{"k", k}, {"values", std::move(values)}});
  }
  return json{{"n", n}, {"j_ascending", std::move(columns)},
              {"rows", std::move(rows)}};
}

inline json idempotent_values_json(const IdempotentValueTable& t) {
  const int n = t.n();
  json rows = json::array();
  for (int d = 0; d < n; ++d) {
    json values = json::array();
    for (int k = 1; k <= n; ++k) values.push_back(rational_json(t.value(k, d)));
    rows.push_back(json{{"descents", d}, {"values_k_1_to_n", std::move(values)}});
  }
  return json{{"n", n}, {"rows", std::move(rows)}};
}

/// Group-algebra element as a one-line-word -> rational-string map.
inline json group_algebra_json(const GroupAlgebraElement& e) {
  json map = json::object();
  std::uint64_t r = 0;
  for_each_permutation(
      e.n(),
      [&](const Permutation& p) {
        const Rational& c = e.at_rank(r++);
        if (!c.is_zero()) map[p.to_string()] = c.to_string();
      },
      e.n());
  return map;
}

inline json outcomes_json(const std::vector<CheckOutcome>& outcomes) {
  json out = json::array();
  for (const auto& c : outcomes)
    out.push_back(json{{"identity", c.identity},
                       {"passed", c.passed},
                       {"detail", c.detail}});
  return out;
}

inline json moment_reports_json(const std::vector<MomentReport>& reports) {
  json out = json::array();
  for (const auto& r : reports)
    out.push_back(json{{"statistic", r.statistic},
                       {"estimate", r.estimate},
                       {"exact", rational_json(r.exact)},
                       {"exact_approx", r.exact.approx()},
                       {"std_error", r.std_error},
                       {"z_score", r.z_score}});
  return out;
}

inline json frequency_cells_json(const std::vector<FrequencyCell>& cells) {
  json out = json::array();
  for (const auto& c : cells)
    out.push_back(json{{"label", c.label},
                       {"count", c.count},
                       {"trials", c.trials},
                       {"exact", rational_json(c.exact)},
                       {"exact_approx", c.exact.approx()},
                       {"estimate", c.estimate},
                       {"std_error", c.std_error},
                       {"z_score", c.z_score}});
  return out;
}

inline json descent_gf_json(const DescentGF& gf) {
  json coeff = json::array();
  for (size_t m = 0; m < gf.coeff.size(); ++m)
    coeff.push_back(json{{"power", m}, {"value", rational_json(gf.coeff[m])}});
  return json{{"n", gf.n},
              {"b", gf.b},
              {"r", gf.r},
              {"coefficients", std::move(coeff)}};
}

/// Every command's stdout is one of these envelopes (JSON mode).
inline json envelope(const std::string& command, json parameters,
                     json payload) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"payload", std::move(payload)}};
}

// ---------------------------------------------------------------------------
// CSV rendering. Same numeric content as the JSON payloads; rationals appear
// as num/den columns or p/q strings, floats via float_repr.
// ---------------------------------------------------------------------------

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  line += '\n';
  return line;
}

inline std::string matrix_csv(const Matrix<Rational>& m) {
  std::string out;
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> fields;
    fields.reserve(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) fields.push_back(m(i, j).to_string());
    out += csv_line(fields);
  }
  return out;
}

/// Human-facing table layout: descending j across the columns.
inline std::string foulkes_csv(const FoulkesTable& t) {
  const int n = t.n();
  std::vector<std::string> header{"k"};
  for (int j = n; j >= 1; --j) header.push_back("j=" + std::to_string(j));
  std::string out = csv_line(header);
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> fields{std::to_string(k)};
    for (int j = n; j >= 1; --j) fields.push_back(t.value(k, j).get_str());
    out += csv_line(fields);
  }
  return out;
}

inline std::string outcomes_csv(const std::vector<CheckOutcome>& outcomes) {
  std::string out = csv_line({"identity", "passed", "detail"});
  for (const auto& c : outcomes)
    out += csv_line({c.identity, c.passed ? "true" : "false", c.detail});
  return out;
}

inline std::string moment_reports_csv(const std::vector<MomentReport>& rs) {
  std::string out = csv_line(
      {"statistic", "estimate", "exact", "exact_approx", "std_error",
       "z_score"});
  for (const auto& r : rs)
    out += csv_line({r.statistic, float_repr(r.estimate), r.exact.to_string(),
                     float_repr(r.exact.approx()), float_repr(r.std_error),
                     float_repr(r.z_score)});
  return out;
}

inline std::string frequency_cells_csv(const std::vector<FrequencyCell>& cs) {
  std::string out = csv_line({"label", "count", "trials", "exact",
                              "exact_approx", "estimate", "std_error",
                              "z_score"});
  for (const auto& c : cs)
    out += csv_line({c.label, std::to_string(c.count), std::to_string(c.trials),
                     c.exact.to_string(), float_repr(c.exact.approx()),
                     float_repr(c.estimate), float_repr(c.std_error),
                     float_repr(c.z_score)});
  return out;
}

}  // namespace carries
