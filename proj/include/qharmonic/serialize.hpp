#ifndef QHARMONIC_SERIALIZE_HPP
#define QHARMONIC_SERIALIZE_HPP

// JSON encodings shared by the CLI and reports:
//   BigRat  -> "p/q" (or "p")
//   Poly    -> ["c0", "c1", ...] ascending degree
//   RatFunc -> {"num": [...], "den": [...]}

#include <qharmonic/ratfunc.hpp>

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace qharmonic {

using json = nlohmann::ordered_json;

inline json to_json_value(const BigRat& r) { return to_string(r); }

inline json to_json_value(const Poly& p)
{
  json arr = json::array();
  for (const auto& c : p.coeffs())
    arr.push_back(to_string(c));
  return arr;
}

inline json to_json_value(const RatFunc& r)
{
  return json{{"num", to_json_value(r.num())}, {"den", to_json_value(r.den())}};
}

inline BigRat bigrat_from_json(const json& j)
{
  if (!j.is_string())
    throw std::invalid_argument("rational must be encoded as a string");
  return parse_bigrat(j.get<std::string>());
}

inline Poly poly_from_json(const json& j)
{
  if (!j.is_array())
    throw std::invalid_argument("polynomial must be encoded as an array");
  std::vector<BigRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j)
    coeffs.push_back(bigrat_from_json(c));
  return Poly(std::move(coeffs));
}

/// Accepts any num/den pair and canonicalizes it.
inline RatFunc ratfunc_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational function must be {\"num\": [...], \"den\": [...]}");
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace qharmonic

#endif // QHARMONIC_SERIALIZE_HPP
