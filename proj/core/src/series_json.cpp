#include "qp/series_json.hpp"

#include <algorithm>

#include "json.hpp"

namespace qp {

using nlohmann::json;

namespace {

json series_node(const PowerSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_fraction_string(c));
  return json{{"variable", std::string(var_name(s.var()))}, {"order", s.order()}, {"coefficients", coeffs}};
}

}  // namespace

bool SeriesFamily::is_integral() const {
  auto ok = [](const PowerSeries& s) { return s.is_integral(); };
  return std::all_of(entries.begin(), entries.end(), ok) && (!limit || ok(*limit));
}

bool SeriesFamily::is_counting() const {
  auto ok = [](const PowerSeries& s) {
    return std::all_of(s.coefficients().begin(), s.coefficients().end(),
                       [](const Rational& q) { return is_integer(q) && q >= 0; });
  };
  return std::all_of(entries.begin(), entries.end(), ok) && (!limit || ok(*limit));
}

std::string to_json(const PowerSeries& s, int indent) { return series_node(s).dump(indent); }

PowerSeries power_series_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SeriesError(std::string("series JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("variable") || !j.contains("order") || !j.contains("coefficients")) {
    throw SeriesError("series JSON: missing field");
  }
  const Var v = parse_var(j.at("variable").get<std::string>());
  const int order = j.at("order").get<int>();
  std::vector<Rational> c;
  for (const auto& x : j.at("coefficients")) c.push_back(parse_fraction(x.get<std::string>()));
  if (static_cast<int>(c.size()) != order + 1) throw SeriesError("series JSON: order/length mismatch");
  return PowerSeries(v, std::move(c));
}

std::string to_json(const BiSeries& s, int indent) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(series_node(c));
  json j{{"outer_variable", "t"}, {"degree", s.degree()}, {"order", s.order()}, {"coefficients", coeffs}};
  return j.dump(indent);
}

std::string to_json(const SeriesFamily& f, int indent) {
  json entries = json::array();
  for (const auto& e : f.entries) entries.push_back(series_node(e));
  json j{{"name", f.name}, {"max_index", f.max_index()}, {"order", f.order()}, {"entries", entries}};
  j["limit"] = f.limit ? series_node(*f.limit) : json(nullptr);
  return j.dump(indent);
}

}  // namespace qp
