#include "qv/json_io.hpp"

#include <sstream>

namespace qv {

using nlohmann::ordered_json;

ordered_json cyclo_to_json(const Cyclo& c) {
  Cyclo r = c.reduced();
  ordered_json coeffs = ordered_json::array();
  for (const Rat& x : r.coeffs()) coeffs.push_back(rat_str(x));
  return ordered_json{{"order", r.order()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const ordered_json& j) {
  long order = j.at("order").get<long>();
  std::vector<Rat> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rat(s.get<std::string>()));
  return Cyclo(order, std::move(coeffs));
}

ordered_json series_to_json(const MultiSeries& s) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    if (c.is_zero()) continue;
    terms.push_back(ordered_json{{"exp", e}, {"coeff", cyclo_to_json(c)}});
  }
  return ordered_json{
      {"variables", s.variables()}, {"truncation", s.truncation()}, {"terms", terms}};
}

ordered_json qseries_to_json(const QSeries& s) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    if (c.is_zero()) continue;
    terms.push_back(ordered_json{{"exp", rat_str(e)}, {"coeff", cyclo_to_json(c)}});
  }
  return ordered_json{{"truncation", rat_str(s.truncation())}, {"terms", terms}};
}

std::string qseries_to_csv(const QSeries& s) {
  std::ostringstream os;
  for (const auto& [e, c] : s.terms()) {
    if (c.is_zero()) continue;
    os << rat_str(e) << "," << rat_str(c.to_rational()) << "\n";
  }
  return os.str();
}

std::string pretty_series(const MultiSeries& s) {
  std::ostringstream os;
  os << "series in e^{-a_i}, i in {";
  for (size_t i = 0; i < s.variables().size(); ++i)
    os << (i ? "," : "") << s.variables()[i];
  os << "}, weighted degree <= " << s.truncation() << "\n";
  for (const auto& [e, c] : s.terms()) {
    if (c.is_zero()) continue;
    os << "  [";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]  " << c.to_string() << "\n";
  }
  return os.str();
}

std::string pretty_qseries(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (c.is_rational()) os << rat_str(c.to_rational());
    else os << "(" << c.to_string() << ")";
    if (e != 0) os << "*q^" << (e.get_den() == 1 ? rat_str(e) : "(" + rat_str(e) + ")");
  }
  if (first) os << "0";
  os << "\n";
  return os.str();
}

}  // namespace qv
