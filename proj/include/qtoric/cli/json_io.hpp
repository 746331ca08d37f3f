#pragma once

#include <json.hpp>

#include "qtoric/global/superabundance.hpp"
#include "qtoric/mw/section.hpp"
#include "qtoric/quasitoric/qtrel.hpp"
#include "qtoric/singularities/curve.hpp"
#include "qtoric/singularities/points.hpp"

namespace qtoric::io {

using json = nlohmann::json;

// {"n": 6, "radical": {"k": 3, "r": "4"}, "trust": false}; r is an expression in w{n}.
FieldSpec field_spec_from_json(const json& j);
json to_json(const FieldSpec& s);
// Null for Q.
FieldPtr make_field(const FieldSpec& s);

// JSON field entry if present, otherwise the fallback.
FieldPtr field_or(const json& j, const FieldPtr& fallback);

TriPoly poly_from_json(const json& j, const FieldPtr& f);  // string expression or integer
std::string poly_string(const TriPoly& p);

QTRel qtrel_from_json(const json& j, const FieldPtr& f);
json to_json(const QTRel& r);
json to_json(const QTReport& r);

// {"F", "A_num", "A_den", "B_num", "B_den"} or {"infinity": true}.
struct SectionFile {
    FieldPtr field;
    CurveF curve;
    Section section;
};
SectionFile section_from_json(const json& j, const FieldPtr& f);
// A curve from F alone: homogeneous of degree 6k uses make, anything else the affine chart.
CurveF curve_from_F(const TriPoly& F, const FieldPtr& f);
json to_json(const Section& s, const CurveF& C);

ResolutionData resolution_from_json(const json& j);
SingRecord sing_record_from_json(const json& j);
// {"field", "components": [{"F", "eps"}], "singular_points": [{"type", "eps", "point", "resolution"}]}
CurveSpec curve_spec_from_json(const json& j, const FieldPtr& f);

std::vector<ExactPoint> exact_points_from_json(const json& j, const FieldPtr& f);
// {"numeric": true, "bits": n, "points": [[[re, im], [re, im], [re, im]], ...]} with decimal strings.
std::vector<NumericPoint> numeric_points_from_json(const json& j);

json to_json(const AlexPoly& a);
json to_json(const ExactPoint& p);
json to_json(const NumericPoint& p, int digits);
json to_json(const Superabundance& s);
json to_json(const DivisibilityReport& r);
json to_json(const BoundReport& r);

json rat_json(const Rat& r);  // integer when integral, else "p/q"

}  // namespace qtoric::io
