#include "alliance/json_io.hpp"

#include <string>

#include "alliance/errors.hpp"

namespace alliance {

namespace {

int parse_exponent_key(const std::string& key) {
  if (key.empty() || key.size() > 6) throw parse_error("polynomial JSON: bad exponent \"" + key + "\"");
  for (char ch : key)
    if (ch < '0' || ch > '9') throw parse_error("polynomial JSON: bad exponent \"" + key + "\"");
  return std::stoi(key);
}

mpz_class parse_decimal(const nlohmann::json& j) {
  if (!j.is_string()) throw parse_error("polynomial JSON: coefficient must be a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  if (s.empty()) throw parse_error("polynomial JSON: empty coefficient");
  for (char ch : s)
    if (ch < '0' || ch > '9') throw parse_error("polynomial JSON: bad coefficient \"" + s + "\"");
  return mpz_class(s, 10);
}

}  // namespace

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) coeffs[std::to_string(k)] = p.coeff(k).get_str();
  return {{"degree", p.is_zero() ? 0 : p.degree()}, {"coeffs", coeffs}};
}

Polynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
    throw parse_error("polynomial JSON: expected {\"degree\", \"coeffs\"}");
  if (!j["degree"].is_number_integer() || !j["coeffs"].is_object())
    throw parse_error("polynomial JSON: bad field types");
  std::vector<mpz_class> coeffs;
  for (const auto& [key, value] : j["coeffs"].items()) {
    int k = parse_exponent_key(key);
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1);
    coeffs[k] = parse_decimal(value);
  }
  Polynomial p{std::move(coeffs)};
  int declared = j["degree"].get<int>();
  int actual = p.is_zero() ? 0 : p.degree();
  if (declared != actual)
    throw parse_error("polynomial JSON: degree " + std::to_string(declared) +
                      " does not match coefficients (" + std::to_string(actual) + ")");
  return p;
}

nlohmann::json report_to_json(const AllianceReport& r) {
  nlohmann::json checks = {
      {"a2_le_m", r.checks.a2_le_m},
      {"a2_eq_m_iff_maxdeg_le_2", r.checks.a2_eq_m_iff_maxdeg_le_2},
      {"an_eq_1_iff_connected", r.checks.an_eq_1_iff_connected},
      {"a2_eq_1_iff_unique_light_edge", r.checks.a2_eq_1_iff_unique_light_edge},
  };
  nlohmann::json mode;
  if (r.verdict.mode_index) mode = *r.verdict.mode_index;
  return {{"polynomial", poly_to_json(r.polynomial)},
          {"alliance_number", r.alliance_number},
          {"count", r.total_alliances.get_str()},
          {"unimodal", r.verdict.unimodal},
          {"log_concave", r.verdict.log_concave},
          {"mode", mode},
          {"checks", checks}};
}

AllianceReport report_from_json(const nlohmann::json& j) {
  for (const char* field : {"polynomial", "alliance_number", "count", "unimodal", "log_concave",
                            "mode", "checks"})
    if (!j.contains(field)) throw parse_error(std::string("report JSON: missing ") + field);
  AllianceReport r;
  r.polynomial = poly_from_json(j["polynomial"]);
  r.alliance_number = j["alliance_number"].get<int>();
  r.total_alliances = parse_decimal(j["count"]);
  // mode_unique is not serialized; the verdict is a pure function of the
  // polynomial, so recompute and cross-check the stored fields.
  r.verdict = sequence_verdict(r.polynomial);
  if (r.verdict.unimodal != j["unimodal"].get<bool>() ||
      r.verdict.log_concave != j["log_concave"].get<bool>())
    throw parse_error("report JSON: shape flags disagree with the polynomial");
  if (r.verdict.mode_index.has_value() != !j["mode"].is_null() ||
      (r.verdict.mode_index && *r.verdict.mode_index != j["mode"].get<int>()))
    throw parse_error("report JSON: mode disagrees with the polynomial");
  const auto& checks = j["checks"];
  r.checks.a2_le_m = checks.at("a2_le_m").get<bool>();
  r.checks.a2_eq_m_iff_maxdeg_le_2 = checks.at("a2_eq_m_iff_maxdeg_le_2").get<bool>();
  r.checks.an_eq_1_iff_connected = checks.at("an_eq_1_iff_connected").get<bool>();
  r.checks.a2_eq_1_iff_unique_light_edge = checks.at("a2_eq_1_iff_unique_light_edge").get<bool>();
  return r;
}

}  // namespace alliance
