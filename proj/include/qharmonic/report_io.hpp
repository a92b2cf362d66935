#ifndef QHARMONIC_REPORT_IO_HPP
#define QHARMONIC_REPORT_IO_HPP

#include <qharmonic/identities.hpp>
#include <qharmonic/serialize.hpp>
#include <qharmonic/transforms.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qharmonic {

inline json to_json_value(const ReportValue& v)
{
  return std::visit(
      [](const auto& x) -> json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, std::vector<BigRat>>) {
          json arr = json::array();
          for (const auto& r : x)
            arr.push_back(to_string(r));
          return arr;
        } else {
          return to_json_value(x);
        }
      },
      v);
}

inline ReportValue report_value_from_json(const json& j)
{
  if (j.is_string())
    return bigrat_from_json(j);
  if (j.is_object())
    return ratfunc_from_json(j);
  if (j.is_array()) {
    std::vector<BigRat> vals;
    for (const auto& e : j)
      vals.push_back(bigrat_from_json(e));
    return vals;
  }
  throw std::invalid_argument("unrecognized report value");
}

inline json to_json(const IdentityReport& r)
{
  json j;
  j["identity"] = std::string(to_string(r.identity));
  j["n"] = r.n;
  j["m"] = r.m;
  j["mode"] = std::string(to_string(r.mode));
  j["lhs"] = to_json_value(r.lhs);
  j["rhs"] = to_json_value(r.rhs);
  j["equal"] = r.equal;
  if (r.sample_points) {
    json pts = json::array();
    for (const auto& p : *r.sample_points)
      pts.push_back(to_string(p));
    j["sample_points"] = pts;
  } else {
    j["sample_points"] = nullptr;
  }
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["den_degree"] = r.den_degree ? json(*r.den_degree) : json(nullptr);
  return j;
}

inline IdentityReport report_from_json(const json& j)
{
  IdentityReport r;
  r.identity = parse_identity(j.at("identity").get<std::string>());
  r.n = j.at("n").get<long>();
  r.m = j.at("m").get<long>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.lhs = report_value_from_json(j.at("lhs"));
  r.rhs = report_value_from_json(j.at("rhs"));
  r.equal = j.at("equal").get<bool>();
  if (j.contains("sample_points") && !j["sample_points"].is_null()) {
    std::vector<BigRat> pts;
    for (const auto& p : j["sample_points"])
      pts.push_back(bigrat_from_json(p));
    r.sample_points = std::move(pts);
  }
  if (j.contains("seed") && !j["seed"].is_null())
    r.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("den_degree") && !j["den_degree"].is_null())
    r.den_degree = j["den_degree"].get<long>();
  return r;
}

/// Serialized string form used in CSV cells: rationals as "p/q", everything
/// else as compact JSON.
inline std::string serialized_string(const ReportValue& v)
{
  if (const auto* r = std::get_if<BigRat>(&v))
    return to_string(*r);
  return to_json_value(v).dump();
}

inline std::string human_readable(const ReportValue& v)
{
  return std::visit(
      [](const auto& x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, std::vector<BigRat>>) {
          std::string s = "[";
          for (std::size_t i = 0; i < x.size(); ++i)
            s += (i ? ", " : "") + to_string(x[i]);
          return s + "]";
        } else if constexpr (std::is_same_v<X, BigRat>) {
          return to_string(x);
        } else {
          return x.to_string();
        }
      },
      v);
}

inline std::string csv_escape(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kCsvHeader = "identity,n,m,mode,equal,lhs,rhs";

inline std::string to_csv_row(const IdentityReport& r)
{
  std::ostringstream out;
  out << to_string(r.identity) << ',' << r.n << ',' << r.m << ',' << to_string(r.mode) << ','
      << (r.equal ? "true" : "false") << ',' << csv_escape(serialized_string(r.lhs)) << ','
      << csv_escape(serialized_string(r.rhs));
  return out.str();
}

inline std::string to_text(const IdentityReport& r)
{
  std::ostringstream out;
  out << to_string(r.identity) << " n=" << r.n << " m=" << r.m << " " << to_string(r.mode) << ": "
      << (r.equal ? "equal" : "NOT EQUAL") << "\n  lhs = " << human_readable(r.lhs)
      << "\n  rhs = " << human_readable(r.rhs);
  if (r.sample_points) {
    out << "\n  points = " << human_readable(*r.sample_points);
    if (r.seed)
      out << " (seed " << *r.seed << ")";
  }
  if (r.den_degree)
    out << "\n  denominator degree = " << *r.den_degree;
  return out.str();
}

inline json to_json_value(const QMatrix& m)
{
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(to_json_value(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline std::string to_text(const QMatrix& m)
{
  std::vector<std::vector<std::string>> cells(m.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      cells[i].push_back(m(i, j).to_string());
      width = std::max(width, cells[i].back().size());
    }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? "  " : "") << std::string(width - row[j].size(), ' ') << row[j];
    out << "]\n";
  }
  return out.str();
}

} // namespace qharmonic

#endif // QHARMONIC_REPORT_IO_HPP
