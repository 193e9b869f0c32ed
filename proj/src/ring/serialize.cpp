#include "tqft/ring/serialize.hpp"

#include "tqft/errors.hpp"

namespace tqft::ring {

using nlohmann::json;

namespace {

json coeff_object(const IntLaurent::Coeffs& coeffs) {
  json out = json::object();
  for (const auto& [e, c] : coeffs) out[std::to_string(e)] = c.get_str();
  return out;
}

IntLaurent::Coeffs parse_coeffs(const json& j) {
  if (!j.is_object()) throw DomainError("coeffs must be an object");
  IntLaurent::Coeffs out;
  for (const auto& [key, value] : j.items()) {
    size_t used = 0;
    long e = std::stol(key, &used);
    if (used != key.size()) throw DomainError("bad exponent key: " + key);
    mpz_class c;
    if (c.set_str(value.get<std::string>(), 10) != 0) throw DomainError("bad integer: " + value.dump());
    out[e] += c;
  }
  return out;
}

mpz_class parse_den(const json& j) {
  if (!j.contains("den")) return 1;
  mpz_class d;
  if (d.set_str(j.at("den").get<std::string>(), 10) != 0 || d <= 0) throw DomainError("bad denominator");
  return d;
}

}  // namespace

json to_json(const IntLaurent& f) { return json{{"var", "A"}, {"coeffs", coeff_object(f.coeffs())}, {"den", "1"}}; }

IntLaurent laurent_from_json(const json& j) {
  if (j.at("var").get<std::string>() != "A") throw DomainError("IntLaurent must use var A");
  if (parse_den(j) != 1) throw DomainError("IntLaurent must have denominator 1");
  return IntLaurent::from_coeffs(parse_coeffs(j.at("coeffs")));
}

json to_json(const CycNum& x) {
  if (!x.field()) throw DomainError("cannot serialize a detached zero");
  IntLaurent::Coeffs coeffs;
  for (size_t k = 0; k < x.num().size(); ++k)
    if (x.num()[k] != 0) coeffs.emplace(static_cast<long>(k), x.num()[k]);
  const bool is_a = x.field()->n() == 2 * x.field()->p();
  return json{{"var", is_a ? "A" : "zeta_4p"},
              {"coeffs", coeff_object(coeffs)},
              {"den", x.den().get_str()},
              {"p", x.field()->p()}};
}

CycNum cycnum_from_json(const json& j) {
  auto field = CycField::get(j.at("p").get<long>());
  const std::string var = j.at("var").get<std::string>();
  const bool is_a = field->n() == 2 * field->p();
  if (var != (is_a ? "A" : "zeta_4p")) throw DomainError("unexpected var " + var);
  CycNum acc(field, 0);
  for (const auto& [e, c] : parse_coeffs(j.at("coeffs"))) acc += CycNum::zeta_power(field, e) * CycNum(field, c);
  return acc * CycNum(field, mpq_class(1, parse_den(j)));
}

json to_json(const LocLaurent& x) {
  json j = to_json(x.num());
  j["one_plus_A_power"] = x.k();
  return j;
}

LocLaurent loc_laurent_from_json(const json& j) {
  return LocLaurent(laurent_from_json(j), j.value("one_plus_A_power", 0u));
}

}  // namespace tqft::ring
