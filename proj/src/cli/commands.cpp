#include "qtoric/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "qtoric/cli/examples.hpp"
#include "qtoric/cli/json_io.hpp"
#include "qtoric/cli/parser.hpp"
#include "qtoric/error.hpp"

namespace qtoric {

using io::json;

namespace {

struct Globals {
    unsigned cyclotomic = 0;
    std::vector<std::string> radical;
    bool trust = false;
    unsigned precision = 256;
    int indent = -1;
    std::size_t threshold = NormalizePolicy{}.threshold;

    FieldPtr field() const {
        FieldSpec s = FieldSpec::cyclotomic(cyclotomic ? cyclotomic : 1);
        if (!radical.empty()) {
            FieldPtr base = NumberField::cyclotomic(s.n);
            FieldElem r = parse_constant(radical[1], base).promote(base);
            s = FieldSpec::with_radical(s.n, static_cast<unsigned>(std::stoul(radical[0])), r.coords(), trust);
        }
        s.trust = trust;
        return io::make_field(s);
    }
    GroupOptions group() const {
        GroupOptions g;
        g.policy.threshold = threshold;
        return g;
    }
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

struct Result {
    json doc;
    int code = 0;
    std::string summary;
};

std::vector<int> s_keys_for(int table) {
    std::vector<int> out;
    for (unsigned k : table_keys(table)) out.push_back(static_cast<int>(k));
    return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quasi-toric relations, Mordell-Weil sections and Alexander polynomials of plane curves", "qtoric"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--field-cyclotomic", g.cyclotomic, "work over Q(w_n)");
    app.add_option("--field-radical", g.radical, "radical layer b^k = r: <k> <r-expr>")->expected(2);
    app.add_flag("--trust-field", g.trust, "skip the irreducibility check of b^k - r");
    app.add_option("--precision", g.precision, "bits for numeric paths");
    app.add_option("--json-indent", g.indent, "JSON indentation, -1 for compact");
    app.add_option("--threshold", g.threshold, "terms before full gcd normalization");

    std::function<Result()> action;
    auto bind = [&](CLI::App* sub, std::function<Result()> f) { sub->callback([&action, f] { action = f; }); };

    // ---- qt
    auto* qt = app.add_subcommand("qt", "quasi-toric relations");
    qt->require_subcommand(1);
    std::string rel_file, rel_file_b;
    std::vector<int> rel_type;
    std::vector<std::string> rel_F, rel_h;
    auto rel_opts = [&](CLI::App* s) {
        s->add_option("--file", rel_file, "relation JSON");
        s->add_option("--type", rel_type, "p,q,r")->delimiter(',');
        s->add_option("--F", rel_F, "three polynomials")->expected(3);
        s->add_option("--H", rel_h, "the three h polynomials")->expected(3);
    };
    auto load_rel = [&](const std::string& file) {
        if (!file.empty()) {
            json j = read_json(file);
            return io::qtrel_from_json(j, io::field_or(j, g.field()));
        }
        if (rel_type.size() != 3 || rel_F.size() != 3 || rel_h.size() != 3)
            throw Error(ErrorKind::InvalidInput, "give --file or --type, --F and --H");
        json j = {{"type", rel_type}, {"F", rel_F}, {"h", rel_h}};
        return io::qtrel_from_json(j, g.field());
    };
    auto* qt_verify_cmd = qt->add_subcommand("verify", "expand a relation");
    rel_opts(qt_verify_cmd);
    bind(qt_verify_cmd, [&] {
        QTReport r = qt_verify(load_rel(rel_file));
        return Result{io::to_json(r), r.verdict == QTVerdict::Ok ? 0 : 1, std::string("verdict ") + qt_verdict_name(r.verdict)};
    });
    auto* qt_eq = qt->add_subcommand("equivalent", "compare two relations");
    qt_eq->add_option("--file", rel_file, "first relation JSON")->required();
    qt_eq->add_option("--other", rel_file_b, "second relation JSON")->required();
    bind(qt_eq, [&] {
        bool e = qt_equivalent(load_rel(rel_file), load_rel(rel_file_b));
        return Result{{{"equivalent", e}}, e ? 0 : 1, e ? "equivalent" : "not equivalent"};
    });
    auto* qt_nf = qt->add_subcommand("normalform", "(2,3,6) normal form");
    rel_opts(qt_nf);
    bind(qt_nf, [&] { return Result{io::to_json(qt_normal_form_236(load_rel(rel_file))), 0, "normal form"}; });

    // ---- mw
    auto* mw = app.add_subcommand("mw", "Mordell-Weil group law");
    mw->require_subcommand(1);
    std::string sec_a, sec_b, zomega, alex_text;
    long scalar_n = 0;
    auto load_sec = [&](const std::string& file) { return io::section_from_json(read_json(file), g.field()); };
    auto emit = [](const Section& s, const CurveF& C, const std::string& what) {
        return Result{io::to_json(s, C), 0, what};
    };
    auto* mw_add = mw->add_subcommand("add", "a + b");
    mw_add->add_option("--a", sec_a)->required();
    mw_add->add_option("--b", sec_b)->required();
    bind(mw_add, [&] {
        auto a = load_sec(sec_a), b = load_sec(sec_b);
        if (a.curve.F != b.curve.F) throw Error(ErrorKind::InvalidInput, "sections lie on different curves");
        return emit(add(a.section, b.section, a.curve, g.group()), a.curve, "sum");
    });
    auto unary = [&](const char* name, const char* help, std::function<Section(const io::SectionFile&)> f) {
        auto* s = mw->add_subcommand(name, help);
        s->add_option("--a", sec_a)->required();
        bind(s, [&, f, name] {
            auto a = load_sec(sec_a);
            return emit(f(a), a.curve, name);
        });
        return s;
    };
    unary("double", "2a", [&](const io::SectionFile& a) { return double_section(a.section, a.curve, g.group()); });
    unary("neg", "-a", [](const io::SectionFile& a) { return negate(a.section, a.curve); });
    unary("omega", "w6 a", [](const io::SectionFile& a) { return omega_action(a.section, a.curve); });
    auto* mw_scalar = unary("scalar", "n a or (p + q w6) a", [&](const io::SectionFile& a) {
        if (!zomega.empty()) {
            auto pos = zomega.find(',');
            if (pos == std::string::npos) throw Error(ErrorKind::InvalidInput, "--zomega expects p,q");
            return zomega_scalar(std::stol(zomega.substr(0, pos)), std::stol(zomega.substr(pos + 1)), a.section, a.curve,
                                 g.group());
        }
        return int_scalar(scalar_n, a.section, a.curve, g.group());
    });
    mw_scalar->add_option("--n", scalar_n, "integer scalar");
    mw_scalar->add_option("--zomega", zomega, "p,q for p + q w6");
    auto* mw_from = mw->add_subcommand("from-qt", "section of a (2,3,6) relation");
    mw_from->add_option("--file", rel_file, "relation JSON")->required();
    bind(mw_from, [&] {
        json j = read_json(rel_file);
        FieldPtr f = io::field_or(j, g.field());
        QTRel r = io::qtrel_from_json(j, f);
        CurveF C = io::curve_from_F(-r.F[2], f);
        return emit(section_from_qt(r, C), C, "section");
    });
    auto* mw_to = mw->add_subcommand("to-qt", "relation of a section");
    mw_to->add_option("--a", sec_a)->required();
    bind(mw_to, [&] {
        auto a = load_sec(sec_a);
        QTRel r = qt_from_section(a.section, a.curve);
        return Result{io::to_json(r), 0, "relation of type " + r.type_string()};
    });
    auto* mw_rank = mw->add_subcommand("rank-from-alex", "rank 2s from (t^2-t+1)^s");
    mw_rank->add_option("--alex", alex_text)->required();
    bind(mw_rank, [&] {
        int r = mw_rank_from_alexander(parse_alexander(alex_text));
        return Result{{{"rank", r}}, 0, "rank " + std::to_string(r)};
    });

    // ---- alex
    auto* alex = app.add_subcommand("alex", "Alexander polynomials");
    alex->require_subcommand(1);
    std::string type, res_file, curve_text, curve_file, cusp_file;
    std::vector<int> eps;
    bool tables = false;
    int degree = 0, cap = -1;
    unsigned delta = 0;
    auto* al_local = alex->add_subcommand("local", "local Alexander polynomial");
    al_local->add_option("--type", type, "catalog type");
    al_local->add_option("--eps", eps)->delimiter(',');
    al_local->add_option("--resolution", res_file, "ResolutionData JSON");
    bind(al_local, [&] {
        SingRecord s;
        if (!res_file.empty()) s.resolution = io::resolution_from_json(read_json(res_file));
        if (!type.empty()) s.type = type;
        s.eps = eps;
        if (s.type != "custom" && s.eps.empty()) s.eps.assign(catalog_branches(s.type), 1);
        AlexPoly a = local_alexander(s);
        json j = io::to_json(a);
        std::optional<ResolutionData> qa = s.resolution && s.resolution->has_table()
                                               ? s.resolution
                                               : (s.type != "custom" ? catalog_quasi_adjunction(s.type, s.eps) : std::nullopt);
        if (qa) {
            json sp = json::array();
            for (const Rat& r : quasi_adjunction_spectrum(*qa)) sp.push_back(io::rat_json(r));
            j["spectrum"] = sp;
        }
        return Result{j, 0, a.to_string()};
    });
    auto* al_cat = alex->add_subcommand("catalog", "table row of a catalog singularity");
    al_cat->add_option("--type", type)->required();
    al_cat->add_option("--eps", eps)->delimiter(',')->required();
    al_cat->add_flag("--tables", tables, "include every table check");
    bind(al_cat, [&] {
        CatalogResult c = catalog_lookup(type, eps);
        json j;
        j["s"] = c.alex.s_vector();
        json mism = json::array(), all = json::array();
        for (const auto& t : c.checks) {
            json k = {{"table", t.table}, {"keys", s_keys_for(t.table)}, {"expected", t.expected}, {"computed", t.computed},
                      {"match", t.match}};
            all.push_back(k);
            if (!t.match) mism.push_back(k);
        }
        if (!mism.empty()) j["mismatch"] = mism;
        if (tables) {
            j["checks"] = all;
            j["alexander"] = c.alex.to_string();
            if (c.spectrum) {
                json sp = json::array();
                for (const Rat& r : *c.spectrum) sp.push_back(io::rat_json(r));
                j["spectrum"] = sp;
            }
        }
        return Result{j, mism.empty() ? 0 : 1, c.alex.to_string()};
    });
    auto* al_cusp = alex->add_subcommand("cuspidal", "Alexander polynomial of a nodal-cuspidal curve");
    al_cusp->add_option("--curve", curve_text, "homogeneous polynomial")->required();
    al_cusp->add_option("--cusps", cusp_file, "points JSON");
    bind(al_cusp, [&] {
        FieldPtr f = g.field();
        TriPoly C = parse_expression(curve_text, f);
        std::optional<std::vector<ExactPoint>> cusps;
        if (!cusp_file.empty()) {
            json j = read_json(cusp_file);
            cusps = io::exact_points_from_json(j, io::field_or(j, f));
        }
        CuspidalResult r = alexander_cuspidal(C, cusps);
        json j = io::to_json(r.alex);
        j["curve_degree"] = r.degree;
        j["cusps"] = r.cusps;
        j["nodes"] = r.nodes;
        if (r.sup) j["superabundance"] = io::to_json(*r.sup);
        if (!r.warning.empty()) j["warning"] = r.warning;
        return Result{j, 0, r.alex.to_string()};
    });
    auto* al_bound = alex->add_subcommand("bound", "degree bound on the Alexander polynomial");
    al_bound->add_option("--degree", degree, "curve degree")->required();
    al_bound->add_option("--alex", alex_text)->required();
    al_bound->add_option("--delta", delta, "3, 4 or 6: also check the delta mode");
    bind(al_bound, [&] {
        BoundReport r = check_degree_bound(degree, parse_alexander(alex_text), delta);
        json j = io::to_json(r);
        bool ok = r.pass;
        if (delta != 0) {
            const auto& m = r.modes.at(0);
            j["mode"] = {{"delta", m.delta}, {"value", m.value}, {"bound", m.bound}, {"pass", m.pass}};
            ok = ok && m.pass;
        }
        return Result{j, ok ? 0 : 1, "deg " + std::to_string(r.alex_degree) + " <= " + std::to_string(r.bound)};
    });
    auto* al_div = alex->add_subcommand("divisibility", "divisibility test against local data");
    al_div->add_option("--file", curve_file, "curve JSON")->required();
    al_div->add_option("--alex", alex_text)->required();
    al_div->add_option("--cap", cap, "largest exponent searched");
    bind(al_div, [&] {
        DivisibilityReport r = divisibility_check(io::curve_spec_from_json(read_json(curve_file), g.field()),
                                                  parse_alexander(alex_text), cap);
        return Result{io::to_json(r), r.pass() ? 0 : 1, r.pass() ? "divisibility holds" : "divisibility fails"};
    });

    // ---- sing
    auto* sing = app.add_subcommand("sing", "singular points");
    sing->require_subcommand(1);
    std::vector<std::string> point;
    auto* sg_find = sing->add_subcommand("find", "locate singular points");
    sg_find->add_option("--curve", curve_text)->required();
    bind(sg_find, [&] {
        FieldPtr f = g.field();
        TriPoly C = parse_expression(curve_text, f);
        SingularSearch opt;
        opt.bits = g.precision;
        opt.field = f;
        json pts = json::array();
        int digits = static_cast<int>(g.precision * 0.30103) / 2;
        for (const auto& p : find_singular_points(C, opt)) {
            json k;
            k["exact"] = p.exact;
            k["approx"] = io::to_json(p.approx, digits);
            if (p.exact) {
                k["coords"] = io::to_json(p.coords);
                k["class"] = node_cusp_name(classify_node_cusp(C, p.coords));
            } else {
                k["residual_log2"] = std::round(p.residual_log2 * 100) / 100;
            }
            pts.push_back(k);
        }
        return Result{{{"points", pts}}, 0, std::to_string(pts.size()) + " singular points"};
    });
    auto* sg_cls = sing->add_subcommand("classify", "node, cusp or other");
    sg_cls->add_option("--curve", curve_text)->required();
    sg_cls->add_option("--point", point, "three coordinates")->expected(3)->required();
    bind(sg_cls, [&] {
        FieldPtr f = g.field();
        TriPoly C = parse_expression(curve_text, f);
        ExactPoint P;
        for (int i = 0; i < 3; ++i) P[i] = parse_constant(point[i], f);
        const char* c = node_cusp_name(classify_node_cusp(C, P));
        return Result{{{"class", c}}, 0, c};
    });

    // ---- classify
    auto* cls = app.add_subcommand("classify", "delta classification");
    cls->require_subcommand(1);
    auto* cl_delta = cls->add_subcommand("delta", "germ (--type/--eps) or curve (--file/--alex)");
    cl_delta->add_option("--delta", delta)->required();
    cl_delta->add_option("--type", type);
    cl_delta->add_option("--eps", eps)->delimiter(',');
    cl_delta->add_option("--resolution", res_file);
    cl_delta->add_option("--file", curve_file, "curve JSON");
    cl_delta->add_option("--alex", alex_text, "global Alexander polynomial");
    bind(cl_delta, [&] {
        if (!curve_file.empty()) {
            if (alex_text.empty()) throw Error(ErrorKind::InvalidInput, "--file needs --alex");
            CurveDeltaReport r = classify_curve_delta(io::curve_spec_from_json(read_json(curve_file), g.field()),
                                                      parse_alexander(alex_text), delta);
            json per = json::array();
            for (auto c : r.per_point) per.push_back(delta_class_name(c));
            const char* v = curve_delta_class_name(r.verdict);
            return Result{{{"verdict", v}, {"partial", r.partial}, {"total", r.total}, {"per_point", per}}, 0, v};
        }
        SingRecord s;
        if (!res_file.empty()) s.resolution = io::resolution_from_json(read_json(res_file));
        if (!type.empty()) s.type = type;
        s.eps = eps;
        if (s.type != "custom" && s.eps.empty()) s.eps.assign(catalog_branches(s.type), 1);
        const char* c = delta_class_name(classify_delta(s, delta));
        return Result{{{"class", c}}, 0, c};
    });

    // ---- examples
    auto* ex = app.add_subcommand("examples", "built-in example registry");
    ex->require_subcommand(1);
    std::string ex_name;
    auto* ex_list = ex->add_subcommand("list", "names and summaries");
    bind(ex_list, [&] {
        json j = json::array();
        for (const auto& e : examples_registry()) j.push_back({{"name", e.name}, {"summary", e.summary}});
        return Result{{{"examples", j}}, 0, std::to_string(j.size()) + " examples"};
    });
    auto* ex_run = ex->add_subcommand("run", "run one example");
    ex_run->add_option("name", ex_name)->required();
    bind(ex_run, [&] {
        const ExampleEntry* e = find_example(ex_name);
        if (!e) throw Error(ErrorKind::InvalidInput, "unknown example " + ex_name);
        ExampleResult r = run_example(*e);
        return Result{to_json(r), r.status == CheckStatus::Fail ? 1 : 0, r.name + ": " + check_status_name(r.status)};
    });
    auto* ex_all = ex->add_subcommand("run-all", "run every example");
    bind(ex_all, [&] {
        json list = json::array();
        std::map<std::string, int> counts = {{"PASS", 0}, {"FAIL", 0}, {"DISCREPANCY", 0}};
        std::ostringstream sum;
        for (const auto& e : examples_registry()) {
            ExampleResult r = run_example(e);
            ++counts[check_status_name(r.status)];
            list.push_back(to_json(r));
            sum << r.name << ": " << check_status_name(r.status) << "\n";
        }
        return Result{{{"examples", list}, {"summary", counts}}, counts["FAIL"] ? 1 : 0, sum.str()};
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (!action) {
        err << app.help();
        return 2;
    }
    try {
        Result r = action();
        out << r.doc.dump(g.indent) << "\n";
        if (!r.summary.empty()) err << r.summary << (r.summary.back() == '\n' ? "" : "\n");
        return r.code;
    } catch (const Error& e) {
        out << json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump(g.indent) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << json{{"error", "Internal"}, {"message", e.what()}}.dump(g.indent) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qtoric
