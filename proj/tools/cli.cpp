#include "cli.hpp"

#include "tropsl/error.hpp"
#include "tropsl/json_io.hpp"
#include "tropsl/schur.hpp"
#include "tropsl/stabilizer.hpp"
#include "tropsl/tropconv.hpp"
#include "tropsl/weight_fan.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace tropsl::cli {

namespace {

// Every flag is held as text so that --in documents can fill the same slots.
struct Options {
    std::map<std::string, std::optional<std::string>> values;
    std::optional<std::string> in_file;
    bool non_members = false;

    const std::optional<std::string>& get(const std::string& key) const {
        static const std::optional<std::string> none;
        auto it = values.find(key);
        return it == values.end() ? none : it->second;
    }
    const std::string& require(const std::string& key) const {
        const auto& v = get(key);
        if (!v) throw ParseError("missing required flag --" + key);
        return *v;
    }
};

const std::vector<std::string> kFlagNames = {"field",  "lambda", "n",    "point", "matrix", "points", "type",
                                             "seed",   "count",  "mu",   "diag",  "element"};

using Handler = std::function<Json(const Options&)>;

FieldConfig field_of(const Options& o) { return FieldConfig::parse(o.get("field").value_or("qt")); }

long integer_flag(const Options& o, const std::string& key, long fallback) {
    const auto& v = o.get(key);
    if (!v) return fallback;
    Rational q = parse_rational(*v);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("--" + key + " must be an integer");
    return q.get_num().get_si();
}

Partition lambda_of(const Options& o) { return Partition::parse(o.require("lambda")); }

std::size_t n_of(const Options& o, const Partition& lambda) {
    long n = integer_flag(o, "n", static_cast<long>(lambda.length()));
    if (n < 1) throw ParseError("-n must be positive");
    return static_cast<std::size_t>(n);
}

// Either "1,-1/2,0" or a JSON array of rational strings.
RationalVector vector_flag(const Options& o, const std::string& key) {
    const std::string& text = o.require(key);
    if (!text.empty() && text.front() == '[') return vector_from_json(Json::parse(text));
    return parse_rational_list(text);
}

Exponent exponent_flag(const Options& o, const std::string& key) {
    Exponent e;
    for (const auto& q : vector_flag(o, key)) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("--" + key + " entries must be integers");
        e.push_back(q.get_num().get_si());
    }
    return e;
}

Json json_flag(const Options& o, const std::string& key) { return Json::parse(o.require(key)); }

PointConfiguration points_of(const Options& o) { return PointConfiguration(rows_from_json(json_flag(o, "points"))); }

Json bool_or_null(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json cmd_val(const Options& o) {
    const FieldConfig cfg = field_of(o);
    ValuedElement a = parse_element(cfg, o.require("element"));
    Valuation v = valuation(a, cfg);
    return Json{{"element", a.to_string()},
                {"field", cfg.to_string()},
                {"valuation", v.is_infinite() ? Json("inf") : rational_to_json(v.value())}};
}

Json cmd_trop_apply(const Options& o) {
    const FieldConfig cfg = field_of(o);
    TropicalMatrix m = tropicalize_matrix(field_matrix_from_json(cfg, json_flag(o, "matrix")), cfg);
    RationalVector y = trop_apply(m, vector_flag(o, "point"));
    return Json{{"canonical", vector_to_json(torus_canonicalize(y).coords())},
                {"result", vector_to_json(y)},
                {"tropical_matrix", tropical_matrix_to_json(m)}};
}

Json cmd_stab_check(const Options& o) {
    const FieldConfig cfg = field_of(o);
    SLMatrix g(field_matrix_from_json(cfg, json_flag(o, "matrix")));
    RationalVector x = vector_flag(o, "point");
    if (x.size() != g.dim()) throw DimensionError("point and matrix dimensions differ");
    return Json{{"stabilizes", is_tropical_stabilizer(g, TorusPoint(x), cfg)}};
}

Json cmd_stab_sample(const Options& o) {
    const FieldConfig cfg = field_of(o);
    std::vector<ValuedElement> entries;
    std::string text = o.require("diag");
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) entries.push_back(parse_element(cfg, item));
    DiagonalCocharacterPoint t(std::move(entries), cfg);
    const long count = integer_flag(o, "count", 10);
    if (count < 0) throw ParseError("--count must be nonnegative");
    const auto seed = static_cast<std::uint64_t>(integer_flag(o, "seed", 0));
    auto gs = o.non_members ? sample_non_members(t, static_cast<int>(count), seed)
                            : sample_stabilizer(t, static_cast<int>(count), seed);
    Json mats = Json::array();
    for (const auto& g : gs) mats.push_back(field_matrix_to_json(g.matrix()));
    return Json{{"kind", o.non_members ? "non_members" : "stabilizer"},
                {"matrices", mats},
                {"point", vector_to_json(nu(t).coords())},
                {"seed", seed}};
}

Json coeffs_json(const SchurExpansion& s) {
    Json out = Json::object();
    for (const auto& [mu, c] : s) out[format_exponent(mu)] = c;
    return out;
}

Json cmd_schur_expand(const Options& o) {
    Partition lambda = lambda_of(o);
    return Json{{"coeffs", coeffs_json(schur_expand(lambda, n_of(o, lambda)))}};
}

Json cmd_schur_kostka(const Options& o) {
    Partition lambda = lambda_of(o);
    Exponent mu = exponent_flag(o, "mu");
    return Json{{"kostka", kostka(lambda, mu)}};
}

Json cmd_schur_weights(const Options& o) {
    Partition lambda = lambda_of(o);
    const std::size_t n = n_of(o, lambda);
    Json ws = Json::array();
    for (const auto& w : weights_of(lambda, n)) ws.push_back(format_exponent(w));
    return Json{{"weights", ws}};
}

Json cmd_fan_weights(const Options& o) {
    Partition lambda = lambda_of(o);
    auto r = fan_F_rho(lambda, n_of(o, lambda), Execution::parallel);
    Json hw = Json::object();
    for (const auto& [b, mu] : r.highest_weights) hw[b.to_string()] = format_exponent(mu);
    Json co = Json::array();
    for (const auto& [a, b] : r.coincidences) co.push_back({a.to_string(), b.to_string()});
    return Json{{"coincidences", co}, {"fan", fan_to_json(r.fan)}, {"highest_weights", hw}};
}

Json cmd_fan_schur(const Options& o) {
    Partition lambda = lambda_of(o);
    const FieldConfig cfg = field_of(o);
    TropicalPolynomial f = tropicalize(schur_expand(lambda, n_of(o, lambda), Execution::parallel), cfg);
    return Json{{"fan", fan_to_json(dual_complex_fan(f))}};
}

Json cmd_fan_compare(const Options& o) {
    Partition lambda = lambda_of(o);
    auto r = theorem_2_4_check(lambda, n_of(o, lambda), field_of(o), Execution::parallel);
    Json out{{"fans_equal", bool_or_null(r.fans_equal)},
             {"hypothesis_ok", r.hypothesis_ok},
             {"maximal_cones", r.maximal_cones}};
    if (r.witness) out["witness"] = vector_to_json(*r.witness);
    return out;
}

Json cmd_fan_strata(const Options& o) {
    Partition lambda = lambda_of(o);
    Json out = Json::array();
    for (const auto& s : strata(fan_F_rho(lambda, n_of(o, lambda), Execution::parallel).fan)) {
        out.push_back({{"cone_dimension", s.cone_dimension}, {"dimension", s.dimension}, {"label", s.label}});
    }
    return Json{{"strata", out}};
}

Json cmd_tconv_type(const Options& o) {
    PointConfiguration m = points_of(o);
    return Json{{"type", type_to_json(type_of(vector_flag(o, "point"), m))}};
}

Json cmd_tconv_cell(const Options& o) {
    PointConfiguration m = points_of(o);
    TypeVector t = type_from_json(json_flag(o, "type"));
    Polyhedron p = cell_X_T(t, m);
    const bool empty = p.is_empty();
    Json out{{"bounded", !empty && p.is_bounded()},
             {"empty", empty},
             {"equalities", constraints_to_json(p.equalities())},
             {"inequalities", constraints_to_json(p.inequalities())}};
    out["dimension"] = empty ? Json(nullptr) : Json(p.dimension());
    return out;
}

Json cmd_tconv_member(const Options& o) {
    PointConfiguration m = points_of(o);
    RationalVector x = vector_flag(o, "point");
    return Json{{"bounded_cell", in_bounded_cell(x, m)},
                {"max_hull", hull_membership(x, m)},
                {"min_hull", min_hull_membership(x, m)},
                {"type", type_to_json(type_of(x, m))}};
}

void fill_from_document(Options& o) {
    std::ifstream f(*o.in_file);
    if (!f) throw ParseError("cannot read --in file " + *o.in_file);
    Json doc = Json::parse(f);
    if (!doc.is_object()) throw ParseError("--in document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "non_members") {
            o.non_members = o.non_members || value.get<bool>();
            continue;
        }
        auto it = o.values.find(key);
        if (it == o.values.end()) throw ParseError("unknown key in --in document: " + key);
        if (it->second) continue;  // command-line flags win
        it->second = value.is_string() ? value.get<std::string>() : value.dump();
    }
}

Json error_json(const std::string& message, const char* kind) { return Json{{"error", message}, {"kind", kind}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    Options o;
    for (const auto& k : kFlagNames) o.values[k] = std::nullopt;

    CLI::App app{"Exact tropical computations for SL_n buildings, Schur polynomials and weight fans", "tropsl"};
    app.require_subcommand(1);
    Handler chosen;

    auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::initializer_list<const char*> flags, Handler h) {
        CLI::App* sub = parent->add_subcommand(name, help);
        for (const char* flag : flags) {
            const std::string key = flag;
            sub->add_option(key == "n" ? "-n" : "--" + key, o.values[key]);
        }
        sub->add_option("--in", o.in_file, "JSON document whose keys fill unset flags");
        sub->callback([&chosen, h] { chosen = h; });
        return sub;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };

    verb(&app, "val", "valuation of a field element", {"field", "element"}, cmd_val);
    verb(group("trop", "tropicalized matrix action"), "apply", "apply trop(g) to a point", {"field", "matrix", "point"},
         cmd_trop_apply);
    CLI::App* stab = group("stab", "stabilizers of torus points");
    verb(stab, "check", "does g stabilize x tropically", {"field", "matrix", "point"}, cmd_stab_check);
    CLI::App* sample = verb(stab, "sample", "sample stabilizer elements of nu(t)", {"field", "diag", "count", "seed"},
                            cmd_stab_sample);
    sample->add_flag("--non-members", o.non_members, "sample elements outside the stabilizer instead");
    CLI::App* schur = group("schur", "Schur polynomials");
    verb(schur, "expand", "monomial expansion", {"lambda", "n"}, cmd_schur_expand);
    verb(schur, "kostka", "Kostka number", {"lambda", "mu"}, cmd_schur_kostka);
    verb(schur, "weights", "weights with multiplicity one each", {"lambda", "n"}, cmd_schur_weights);
    CLI::App* fan = group("fan", "weight fans");
    verb(fan, "weights", "the fan F_rho from highest weights", {"lambda", "n"}, cmd_fan_weights);
    verb(fan, "schur", "normal fan of the Schur Newton polytope", {"lambda", "n", "field"}, cmd_fan_schur);
    verb(fan, "compare", "compare both fans", {"lambda", "n", "field"}, cmd_fan_compare);
    verb(fan, "strata", "strata of the compactification", {"lambda", "n"}, cmd_fan_strata);
    CLI::App* tconv = group("tconv", "tropical convexity");
    verb(tconv, "type", "type of a point", {"points", "point"}, cmd_tconv_type);
    verb(tconv, "cell", "the cell of a type", {"points", "type"}, cmd_tconv_cell);
    verb(tconv, "member", "hull and bounded-cell membership", {"points", "point"}, cmd_tconv_member);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << Json{{"help", app.help()}}.dump(2) << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        out << error_json(e.what(), "usage").dump(2) << "\n";
        return input_error;
    }

    try {
        if (o.in_file) fill_from_document(o);
        out << chosen(o).dump(2) << "\n";
        return ok;
    } catch (const PreconditionError& e) {
        out << error_json(e.what(), "precondition").dump(2) << "\n";
        return precondition_failed;
    } catch (const DimensionError& e) {
        out << error_json(e.what(), "dimension").dump(2) << "\n";
        return input_error;
    } catch (const ParseError& e) {
        out << error_json(e.what(), "parse").dump(2) << "\n";
        return input_error;
    } catch (const Json::exception& e) {
        out << error_json(e.what(), "parse").dump(2) << "\n";
        return input_error;
    }
}

}  // namespace tropsl::cli
