#include "talex/json_io.hpp"

namespace talex {

nlohmann::json poly_to_json(const IntPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"min_deg", p.min_degree()}, {"coeffs", coeffs}};
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("min_deg") || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial JSON needs min_deg and coeffs");
  std::vector<Int> c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_string()) c.push_back(parse_int(x.get<std::string>()));
    else if (x.is_number_integer()) c.emplace_back(x.get<long>());
    else throw std::invalid_argument("polynomial coefficient must be a decimal string");
  }
  return IntPoly(j.at("min_deg").get<long>(), std::move(c));
}

nlohmann::json matrix_to_json(const Matrix<IntPoly>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json int_matrix_to_json(const Matrix<Int>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace talex
