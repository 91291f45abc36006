#include "majorlab/json_io.hpp"

#include "majorlab/errors.hpp"

namespace majorlab {

namespace {

Rational rational_from_json_scalar(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("expected a rational literal, got: " + j.dump());
}

}  // namespace

Json to_json(const ProbVec& p) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) arr.push_back(to_string(p[i]));
  return Json{{"dist", std::move(arr)}};
}

ProbVec prob_vec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dist") || !j["dist"].is_array()) {
    throw ParseError("distribution JSON must be {\"dist\": [...]}");
  }
  std::vector<Rational> entries;
  for (const Json& e : j["dist"]) entries.push_back(rational_from_json_scalar(e));
  return ProbVec(std::move(entries));
}

Json to_json(const Channel& w) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < w.input_size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < w.output_size(); ++j) {
      row.push_back(to_string(w.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

Channel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError("channel JSON must be {\"rows\": [[...], ...]}");
  }
  std::vector<std::vector<Rational>> rows;
  for (const Json& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("channel row must be an array");
    std::vector<Rational> r;
    for (const Json& e : row) r.push_back(rational_from_json_scalar(e));
    rows.push_back(std::move(r));
  }
  return Channel(std::move(rows));
}

Json to_json(const ExtReal& v) {
  Json j;
  j["value"] = v.is_infinite() ? Json(nullptr) : Json(v.value());
  j["exact_infinite"] = v.is_infinite();
  j["bits"] = true;
  return j;
}

ExtReal ext_real_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("value") || !j.contains("exact_infinite")) {
    throw ParseError("extended-real JSON must carry 'value' and 'exact_infinite'");
  }
  if (j["exact_infinite"].get<bool>()) return ExtReal::infinity();
  return ExtReal::finite(j["value"].get<double>());
}

}  // namespace majorlab
