#include "alexobs/poly_io.hpp"

#include <stdexcept>

#include "alexobs/cyclo.hpp"

namespace alexobs {

namespace {

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
  static const BigInt kMax = BigInt(std::numeric_limits<long long>::max());
  static const BigInt kMin = BigInt(std::numeric_limits<long long>::min());
  if (v >= kMin && v <= kMax) {
    return static_cast<long long>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument(where + ": malformed integer string");
    }
  }
  throw std::invalid_argument(where + ": expected an integer (or decimal string)");
}

}  // namespace

nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json term = nlohmann::ordered_json::array();
    term.push_back(e);
    term.push_back(bigint_to_json(numerator(c)));
    term.push_back(bigint_to_json(denominator(c)));
    out.push_back(term);
  }
  return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j, const std::string& where,
                           std::set<long long>* cyclo_hints) {
  if (j.is_object()) {
    if (j.size() != 1 || !j.contains("cyclo")) {
      throw std::invalid_argument(where + ": polynomial object must have exactly the key \"cyclo\"");
    }
    const auto& body = j.at("cyclo");
    if (!body.is_object()) {
      throw std::invalid_argument(where + ": \"cyclo\" must map orders to multiplicities");
    }
    LaurentPoly out = LaurentPoly::one();
    for (const auto& [key, value] : body.items()) {
      long long e = 0;
      try {
        size_t pos = 0;
        e = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument(where + ": cyclo order \"" + key + "\" is not an integer");
      }
      if (e < 1) throw std::invalid_argument(where + ": cyclo order must be >= 1");
      if (!value.is_number_integer() || value.get<long long>() < 1) {
        throw std::invalid_argument(where + ": cyclo multiplicity must be a positive integer");
      }
      if (cyclo_hints) cyclo_hints->insert(e);
      out *= pow(cyclotomic(e), value.get<unsigned long long>());
    }
    return out;
  }
  if (!j.is_array()) {
    throw std::invalid_argument(where + ": polynomial must be a term list or a cyclo object");
  }
  LaurentPoly out;
  bool have_prev = false;
  long long prev_exp = 0;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3) {
      throw std::invalid_argument(where + ": each term must be [exponent, numerator, denominator]");
    }
    if (!term[0].is_number_integer()) {
      throw std::invalid_argument(where + ": term exponent must be an integer");
    }
    const long long e = term[0].get<long long>();
    if (have_prev && e <= prev_exp) {
      throw std::invalid_argument(where + ": term exponents must be strictly increasing");
    }
    have_prev = true;
    prev_exp = e;
    const BigInt num = bigint_from_json(term[1], where);
    const BigInt den = bigint_from_json(term[2], where);
    if (num == 0) throw std::invalid_argument(where + ": stored coefficients must be nonzero");
    if (den < 1) throw std::invalid_argument(where + ": denominators must be positive");
    out.set_coeff(e, make_rational(num, den));
  }
  return out;
}

}  // namespace alexobs
