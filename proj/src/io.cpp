#include "poincare/io.hpp"

#include "poincare/errors.hpp"

namespace poincare {

Json to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Json to_json(const BiPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.y_coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const IsolationList& roots, int digits) {
  Json out = Json::array();
  for (const auto& iv : roots) {
    out.push_back({{"lo", to_fraction_string(iv.lo)},
                   {"hi", to_fraction_string(iv.hi)},
                   {"mid", to_decimal(iv.midpoint(), digits)}});
  }
  return out;
}

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (!j.is_string()) throw ParseError("coefficient must be a string or integer");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) {
    throw ParseError("not an integer: " + j.get<std::string>());
  }
  return v;
}

}  // namespace

IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

BiPoly bi_poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("bivariate polynomial must be an array of arrays");
  std::vector<IntPoly> ys;
  ys.reserve(j.size());
  for (const auto& c : j) ys.push_back(int_poly_from_json(c));
  return BiPoly(std::move(ys));
}

IsolationList isolation_list_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("root list must be an array");
  IsolationList out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("lo") || !e.contains("hi")) {
      throw ParseError("root entry needs lo and hi");
    }
    RootInterval iv{parse_rational(e["lo"].get<std::string>()),
                    parse_rational(e["hi"].get<std::string>())};
    if (iv.lo > iv.hi) throw ParseError("root entry has lo > hi");
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace poincare
