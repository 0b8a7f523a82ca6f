#pragma once

#include <nlohmann/json_fwd.hpp>

#include "linkalg/gluing.hpp"
#include "linkalg/units.hpp"

namespace linkalg {

using nlohmann::json;

// {"mod": m or null, "terms": [[exponent, coefficient-as-decimal-string]...]}
// with terms sorted by exponent ascending; round-trips bit-exactly.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// {"group": "QtModZt"|"Q1"|"Q1upper", "num": <poly>, "den": <poly>}
json qclass_to_json(const QClass& q);
QClass qclass_from_json(const json& j);

json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

// {"rank": n, "gram": [[<poly>, ...], ...]}
json hermitian_to_json(const HermitianForm& g);
HermitianForm hermitian_from_json(const json& j);

// {"form": <hermitian>}
json presentation_to_json(const LinkingPresentation& p);
LinkingPresentation presentation_from_json(const json& j);

// {"matrix": [[<poly>, ...], ...], "quadratic": bool}
json isometry_to_json(const TorsionIsometry& h, bool quadratic);

// {"sign": +-1, "exp": k} for unit determinants, the string "nonunit"
// otherwise.
json det_class_to_json(const LaurentPoly& det);

json union_basis_to_json(const UnionBasis& basis);

}  // namespace linkalg
