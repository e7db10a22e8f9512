#include "mckay/report_json.hpp"

namespace mckay {

namespace {

Json decimal_list(const std::optional<std::vector<BigInt>>& xs) {
  if (!xs) return nullptr;
  Json out = Json::array();
  for (const auto& x : *xs) out.push_back(to_decimal(x));
  return out;
}

}  // namespace

Json to_json(const CheckReport& r, bool with_timing) {
  Json j;
  j["group_id"] = r.group_id;
  j["group_order"] = r.group_order ? Json(to_decimal(*r.group_order)) : Json(nullptr);
  j["prime"] = r.prime;
  j["route"] = r.route ? Json(to_string(*r.route)) : Json(nullptr);
  j["a_degrees"] = decimal_list(r.a_degrees);
  j["b_degrees"] = decimal_list(r.b_degrees);
  j["verdict"] = to_string(r.verdict);
  if (r.bijection) {
    Json pairs = Json::array();
    for (const auto& [a, b] : *r.bijection) pairs.push_back({to_decimal(a), to_decimal(b)});
    j["bijection"] = std::move(pairs);
  } else {
    j["bijection"] = nullptr;
  }
  j["violator"] = decimal_list(r.violator);
  if (with_timing) {
    const auto& t = r.elapsed_ms;
    j["elapsed_ms"] = {{"total", t.total},         {"enumerate", t.enumerate},
                       {"sylow", t.sylow},         {"normalizer", t.normalizer},
                       {"degrees", t.degrees},     {"match", t.match}};
  }
  return j;
}

Json to_json(const SymmetricTable& t, bool with_timing) {
  Json j;
  j["primes"] = t.primes;
  Json cols = Json::array();
  for (unsigned n : t.columns) cols.push_back("S_" + std::to_string(n));
  j["columns"] = std::move(cols);
  Json rows = Json::array();
  for (const auto& row : t.cells) {
    Json cells = Json::array();
    for (const auto& c : row) {
      Json cell;
      cell["prime"] = c.prime;
      cell["n"] = c.n;
      cell["kind"] = to_string(c.kind);
      cell["verdict"] = to_string(c.report.verdict);
      cell["report"] = to_json(c.report, with_timing);
      cells.push_back(std::move(cell));
    }
    rows.push_back(std::move(cells));
  }
  j["cells"] = std::move(rows);
  return j;
}

}  // namespace mckay
