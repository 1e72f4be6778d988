#pragma once

// JSON forms of the library values. Rationals are always "p/q" strings.

#include <string>
#include <vector>

#include "json.hpp"

#include "daha/complex.hpp"
#include "daha/errors.hpp"
#include "daha/root_system.hpp"
#include "daha/weyl.hpp"

namespace daha {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const QMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(to_json(row));
  return a;
}

inline Json to_json(const ZVec& v) {
  Json a = Json::array();
  for (auto c : v) a.push_back(c);
  return a;
}

inline Json to_json(GenSet s) { return s.indices(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

inline QVec qvec_from_json(const Json& j) {
  if (j.is_string()) return parse_qvec(j.get<std::string>());
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  QVec v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return v;
}

inline Json root_data_to_json(const FiniteRootSystem& R) {
  Json j;
  j["type"] = type_name(R.type());
  j["rank"] = R.rank();
  Json cartan = Json::array();
  for (const auto& row : R.cartan()) cartan.push_back(to_json(row));
  j["cartan"] = cartan;
  j["gram"] = to_json(R.gram());
  return j;
}

/// Validating inverse of root_data_to_json; cartan and gram are optional
/// and checked against the type when present.
inline FiniteRootSystem root_data_from_json(const Json& j) {
  if (!j.contains("type") || !j.contains("rank")) throw ParseError("root data needs \"type\" and \"rank\"");
  RootType t = parse_type(j.at("type").get<std::string>());
  int n = j.at("rank").get<int>();
  FiniteRootSystem base = FiniteRootSystem::build(t, n);
  if (!j.contains("gram") && !j.contains("cartan")) return base;
  QMat gram = base.gram();
  if (j.contains("gram")) {
    gram.clear();
    for (const auto& row : j.at("gram")) gram.push_back(qvec_from_json(row));
  }
  ZMat cartan = base.cartan();
  if (j.contains("cartan")) cartan = j.at("cartan").get<ZMat>();
  return FiniteRootSystem::from_data(t, n, cartan, gram);
}

/// {"mu": [...], "w": [[...]]}: x -> w x + mu on coweight coordinates,
/// with w the matrix of the linear part acting on roots.
inline Json to_json(const WeylElement& g) {
  Json j;
  j["mu"] = to_json(g.mu);
  const int n = g.rank();
  Json w = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < n; ++k) row.push_back(g.M[i * n + k]);
    w.push_back(row);
  }
  j["w"] = w;
  return j;
}

inline Json to_json(const WeylGroup& W, const Facet& f) {
  Json j;
  j["word"] = W.reduced_word(f.rep).letters;
  j["type"] = to_json(f.type);
  j["interior"] = to_json(f.interior);
  j["span"] = to_json(f.span.equations);
  return j;
}

}  // namespace daha
