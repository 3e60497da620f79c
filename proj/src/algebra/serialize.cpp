#include "cpl/algebra/serialize.hpp"

#include "cpl/algebra/error.hpp"

namespace cpl::algebra {

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (std::size_t t = 0; t < p.nterms(); ++t) {
    auto e = p.exponent(t);
    terms.push_back({{"exp", std::vector<Exponent>(e.begin(), e.end())}, {"coef", p.coef(t).get_str()}});
  }
  return {{"vars", *p.vars()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  try {
    VarList vars = make_vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms"))
      terms.push_back({t.at("exp").get<std::vector<Exponent>>(), integer_from_json(t.at("coef"))});
    return LaurentPoly::from_terms(vars, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed Laurent polynomial: ") + e.what());
  }
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& x = m(i, j);
      if (x.fits_slong_p())
        r.push_back(x.get_si());
      else
        r.push_back(x.get_str());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "matrix must be an array of rows");
  std::vector<IntVector> rows;
  std::size_t cols = j.empty() ? 0 : j[0].size();
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != cols) throw Error(Errc::ParseError, "ragged matrix rows");
    IntVector row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

BigRational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRational(BigInt(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::ParseError, "expected an integer or a rational string");
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(Errc::ParseError, "expected an integer or a decimal string");
}

}  // namespace cpl::algebra
