#include "linkalg/serialize.hpp"

#include <nlohmann/json.hpp>

namespace linkalg {

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json::array({e, c.get_str()}));
  json j;
  j["mod"] = p.modulus() ? json(*p.modulus()) : json(nullptr);
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  std::optional<long> mod;
  if (!j.at("mod").is_null()) mod = j.at("mod").get<long>();
  LaurentPoly p = LaurentPoly::zero(mod);
  for (const auto& t : j.at("terms"))
    p.add_term(t.at(0).get<long>(), Int(t.at(1).get<std::string>()));
  return p;
}

namespace {

QGroup group_from_name(const std::string& name) {
  if (name == "QtModZt") return QGroup::QtModZt;
  if (name == "Q1") return QGroup::Q1;
  if (name == "Q1upper") return QGroup::Q1upper;
  throw std::invalid_argument("unknown Q-group name: " + name);
}

}  // namespace

json qclass_to_json(const QClass& q) {
  return json{{"group", to_string(q.group())},
              {"num", poly_to_json(q.value().num())},
              {"den", poly_to_json(q.value().den())}};
}

QClass qclass_from_json(const json& j) {
  return QClass(RatValue(poly_from_json(j.at("num")),
                         poly_from_json(j.at("den"))),
                group_from_name(j.at("group").get<std::string>()));
}

json matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix matrix_from_json(const json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols =
      rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  PolyMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols)
      throw std::invalid_argument("matrix_from_json: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = poly_from_json(j.at(i).at(k));
  }
  return m;
}

json hermitian_to_json(const HermitianForm& g) {
  return json{{"rank", g.rank()}, {"gram", matrix_to_json(g.gram())}};
}

HermitianForm hermitian_from_json(const json& j) {
  PolyMatrix m = matrix_from_json(j.at("gram"));
  if (j.contains("rank") &&
      j.at("rank").get<Eigen::Index>() != m.rows())
    throw std::invalid_argument("hermitian_from_json: rank mismatch");
  return HermitianForm(std::move(m));
}

json presentation_to_json(const LinkingPresentation& p) {
  return json{{"form", hermitian_to_json(p.form())}};
}

LinkingPresentation presentation_from_json(const json& j) {
  return LinkingPresentation(hermitian_from_json(j.at("form")));
}

json isometry_to_json(const TorsionIsometry& h, bool quadratic) {
  return json{{"matrix", matrix_to_json(h.map())}, {"quadratic", quadratic}};
}

json det_class_to_json(const LaurentPoly& det) {
  auto unit = unit_decompose(det);
  if (!unit) return json("nonunit");
  return json{{"sign", unit->sign}, {"exp", unit->exponent}};
}

json union_basis_to_json(const UnionBasis& basis) {
  json out = json::array();
  for (const auto& [x0, x1] : basis.vectors) {
    json v0 = json::array(), v1 = json::array();
    for (Eigen::Index i = 0; i < x0.size(); ++i)
      v0.push_back(poly_to_json(x0(i)));
    for (Eigen::Index i = 0; i < x1.size(); ++i)
      v1.push_back(poly_to_json(x1(i)));
    out.push_back(json{{"x0", std::move(v0)}, {"x1", std::move(v1)}});
  }
  return out;
}

}  // namespace linkalg
