#include "qtoric/cli/json_io.hpp"

#include <cmath>

#include "qtoric/cli/parser.hpp"
#include "qtoric/error.hpp"

namespace qtoric::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::vector<int> int_list(const json& j) {
    if (j.is_number_integer()) return {j.get<int>()};
    if (!j.is_array()) bad("expected an integer list");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

Exp monomial_exponents(const std::string& text) {
    TriPoly m = parse_expression(text, nullptr, "xy");
    if (m.size() != 1) bad("'" + text + "' is not a monomial");
    return unpack(m.terms().begin()->first);
}

}  // namespace

FieldSpec field_spec_from_json(const json& j) {
    if (j.is_number_integer()) return FieldSpec::cyclotomic(j.get<unsigned>());
    FieldSpec s = FieldSpec::cyclotomic(j.value("n", 1u));
    s.trust = j.value("trust", false);
    if (j.contains("radical")) {
        const json& r = j.at("radical");
        unsigned k = need(r, "k").get<unsigned>();
        const json& rv = need(r, "r");
        FieldPtr base = NumberField::cyclotomic(s.n);
        FieldElem v = parse_constant(rv.is_string() ? rv.get<std::string>() : rv.dump(), base).promote(base);
        s = FieldSpec::with_radical(s.n, k, v.coords(), s.trust);
    }
    return s;
}

json to_json(const FieldSpec& s) {
    json j;
    j["n"] = s.n;
    if (s.radical) {
        FieldPtr base = NumberField::cyclotomic(s.n);
        j["radical"] = {{"k", s.radical->k}, {"r", FieldElem(base, s.radical->r).to_string()}};
    }
    if (s.trust) j["trust"] = true;
    return j;
}

FieldPtr make_field(const FieldSpec& s) {
    if (s.n <= 1 && !s.radical) return nullptr;
    return NumberField::make(s);
}

FieldPtr field_or(const json& j, const FieldPtr& fallback) {
    if (j.is_object() && j.contains("field")) return make_field(field_spec_from_json(j.at("field")));
    return fallback;
}

TriPoly poly_from_json(const json& j, const FieldPtr& f) {
    if (j.is_number_integer()) return TriPoly(j.get<long>());
    if (!j.is_string()) bad("expected a polynomial expression");
    return parse_expression(j.get<std::string>(), f);
}

std::string poly_string(const TriPoly& p) { return p.to_string(); }

QTRel qtrel_from_json(const json& j, const FieldPtr& f) {
    QTRel r;
    auto t = int_list(need(j, "type"));
    if (t.size() != 3) bad("relation type must have three entries");
    r.type = {t[0], t[1], t[2]};
    const json& F = need(j, "F");
    const json& h = need(j, "h");
    if (!F.is_array() || !h.is_array() || F.size() != 3 || h.size() != 3) bad("F and h must list three polynomials");
    for (int i = 0; i < 3; ++i) {
        r.F[i] = poly_from_json(F[i], f);
        r.h[i] = poly_from_json(h[i], f);
    }
    return r;
}

json to_json(const QTRel& r) {
    json j;
    j["type"] = {r.type[0], r.type[1], r.type[2]};
    j["F"] = json::array();
    j["h"] = json::array();
    for (int i = 0; i < 3; ++i) {
        j["F"].push_back(poly_string(r.F[i]));
        j["h"].push_back(poly_string(r.h[i]));
    }
    return j;
}

json to_json(const QTReport& r) {
    json j;
    j["verdict"] = qt_verdict_name(r.verdict);
    j["residual"] = poly_string(r.residual);
    if (r.kappa) j["kappa"] = *r.kappa;
    if (r.elliptic) j["elliptic"] = elliptic_type_name(*r.elliptic);
    if (r.omega) {
        j["omega"] = rat_json(*r.omega);
        j["omega_matches"] = r.omega_matches;
    }
    return j;
}

CurveF curve_from_F(const TriPoly& F, const FieldPtr& f) {
    if (F.is_homogeneous() && !F.is_zero() && F.degree() % 6 == 0 && F.degree() > 0) return CurveF::make(F, f);
    return CurveF::affine_chart(F, f);
}

SectionFile section_from_json(const json& j, const FieldPtr& fallback) {
    SectionFile out;
    out.field = field_or(j, fallback);
    out.curve = curve_from_F(poly_from_json(need(j, "F"), out.field), out.field);
    if (j.value("infinity", false)) return out;
    auto get = [&](const char* key, long dflt) {
        return j.contains(key) ? poly_from_json(j.at(key), out.field) : TriPoly(dflt);
    };
    RatFunc A(get("A_num", 0), get("A_den", 1)), B(get("B_num", 0), get("B_den", 1));
    out.section = Section::make(A, B, out.curve);
    return out;
}

json to_json(const Section& s, const CurveF& C) {
    json j;
    j["F"] = poly_string(C.F);
    if (s.is_infinity()) {
        j["infinity"] = true;
        return j;
    }
    TriPoly h2 = s.h().pow(2);
    j["A_num"] = poly_string(s.f());
    j["A_den"] = poly_string(h2);
    j["B_num"] = poly_string(s.g());
    j["B_den"] = poly_string(h2 * s.h());
    j["on_curve"] = on_curve(s, C);
    return j;
}

ResolutionData resolution_from_json(const json& j) {
    ResolutionData r;
    for (const auto& d : need(j, "divisors")) {
        Divisor v;
        v.N = need(d, "N").get<int>();
        v.chi = need(d, "chi").get<int>();
        if (d.contains("c")) v.c = d.at("c").get<int>();
        if (d.contains("e"))
            for (const auto& [mono, val] : d.at("e").items()) {
                Exp e = monomial_exponents(mono);
                v.e[{e[0], e[1]}] = val.get<int>();
            }
        r.divisors.push_back(v);
    }
    return r;
}

SingRecord sing_record_from_json(const json& j) {
    SingRecord s;
    s.type = j.value("type", std::string("custom"));
    if (j.contains("eps")) s.eps = int_list(j.at("eps"));
    if (j.contains("resolution")) s.resolution = resolution_from_json(j.at("resolution"));
    if (s.type == "custom" && !s.resolution) bad("a custom singularity needs resolution data");
    return s;
}

CurveSpec curve_spec_from_json(const json& j, const FieldPtr& fallback) {
    FieldPtr f = field_or(j, fallback);
    CurveSpec c;
    for (const auto& comp : need(j, "components")) {
        Component k;
        if (comp.is_string()) {
            k.F = poly_from_json(comp, f);
        } else {
            k.F = poly_from_json(need(comp, "F"), f);
            k.eps = comp.value("eps", 1);
        }
        c.components.push_back(k);
    }
    if (j.contains("singular_points")) {
        std::vector<SingularPoint> pts;
        for (const auto& p : j.at("singular_points")) {
            SingularPoint sp;
            sp.record = sing_record_from_json(p);
            if (p.contains("point"))
                for (const auto& e : p.at("point")) sp.coords.push_back(poly_from_json(e, f).constant_value());
            pts.push_back(sp);
        }
        c.singular_points = pts;
    }
    c.validate();
    return c;
}

std::vector<ExactPoint> exact_points_from_json(const json& j, const FieldPtr& f) {
    std::vector<ExactPoint> out;
    for (const auto& p : (j.is_object() ? need(j, "points") : j)) {
        if (!p.is_array() || p.size() != 3) bad("a point has three coordinates");
        ExactPoint q;
        for (int i = 0; i < 3; ++i) q[i] = poly_from_json(p[i], f).constant_value();
        out.push_back(q);
    }
    return out;
}

std::vector<NumericPoint> numeric_points_from_json(const json& j) {
    std::vector<NumericPoint> out;
    auto real = [](const json& v) {
        return v.is_string() ? numeric::Real(v.get<std::string>()) : numeric::Real(v.get<double>());
    };
    for (const auto& p : need(j, "points")) {
        if (!p.is_array() || p.size() != 3) bad("a point has three coordinates");
        NumericPoint q;
        for (int i = 0; i < 3; ++i) {
            if (p[i].is_array())
                q[i] = numeric::Complex(real(p[i].at(0)), real(p[i].at(1)));
            else
                q[i] = numeric::Complex(real(p[i]));
        }
        out.push_back(q);
    }
    return out;
}

json to_json(const AlexPoly& a) {
    json j;
    j["alexander"] = a.to_string();
    j["expanded"] = to_string(a.expand());
    j["degree"] = a.degree();
    j["s"] = a.s_vector();
    return j;
}

json to_json(const ExactPoint& p) { return {p[0].to_string(), p[1].to_string(), p[2].to_string()}; }

json to_json(const NumericPoint& p, int digits) {
    json j = json::array();
    for (const auto& c : p) j.push_back({c.re.str(digits, std::ios_base::scientific), c.im.str(digits, std::ios_base::scientific)});
    return j;
}

json to_json(const Superabundance& s) {
    json j;
    j["m"] = s.m;
    j["points"] = s.points;
    j["columns"] = s.columns;
    j["rank"] = s.rank;
    j["h0"] = s.h0;
    j["h1"] = s.h1;
    j["chi"] = s.chi;
    if (s.certificate) {
        const auto& c = *s.certificate;
        auto lg = [](double v) { return std::isfinite(v) ? json(std::round(v * 100) / 100) : json("-inf"); };
        j["certificate"] = {{"bits", c.bits},
                            {"tau_log2", c.tau_log2},
                            {"max_residual_log2", lg(c.max_residual_log2)},
                            {"min_pivot_log2", lg(c.min_pivot_log2)}};
    }
    return j;
}

json to_json(const DivisibilityReport& r) {
    json j;
    j["pass"] = r.pass();
    j["first_pass"] = r.first_pass;
    j["second_pass"] = r.second_pass;
    j["witness"] = r.witness;
    j["bound"] = to_string(r.bound);
    j["degree"] = r.degree;
    j["orders"] = r.orders;
    j["violations"] = r.violations;
    return j;
}

json to_json(const BoundReport& r) {
    json j;
    j["bound"] = r.bound;
    j["deg"] = r.alex_degree;
    j["pass"] = r.pass;
    return j;
}

json rat_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return r.get_str();
}

}  // namespace qtoric::io
