#include "lacuna/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lacuna {

namespace {

using nlohmann::json;

UniPoly parse_poly(const json& coeffs, const std::string& name) {
    if (!coeffs.is_array()) throw ParseError(name + " must be an array of coefficient pairs");
    std::vector<ExactComplex> out;
    for (const auto& entry : coeffs) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError(name + " coefficients must be [re, im] string pairs");
        out.emplace_back(parse_rational(entry[0].get<std::string>()),
                         parse_rational(entry[1].get<std::string>()));
    }
    return UniPoly(std::move(out));
}

ColumnSelector parse_selector(const std::string& name) {
    if (name == "lowest") return ColumnSelector::Lowest;
    if (name == "highest") return ColumnSelector::Highest;
    if (name == "spread") return ColumnSelector::Spread;
    throw ParseError("unknown column selector '" + name + "'");
}

}  // namespace

ProblemConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        if (root.value("schema_version", 1) != 1)
            throw ParseError("unsupported config schema_version");

        const json& jc = root.at("curve");
        UniPoly p1 = parse_poly(jc.at("p1"), "curve.p1");
        UniPoly p2 = parse_poly(jc.at("p2"), "curve.p2");
        std::optional<UniPoly> v;
        if (jc.contains("v")) v = parse_poly(jc.at("v"), "curve.v");
        ParamCurve curve = ParamCurve::make(std::move(p1), std::move(p2), std::move(v));

        const json& jd = root.at("diagram");
        LacunarityDiagram diagram;
        if (jd.contains("generator")) {
            const json& g = jd.at("generator");
            if (g.value("type", "geometric") != "geometric")
                throw ParseError("unknown diagram generator type");
            diagram = geometric_diagram(g.at("D").get<unsigned>(), g.at("tau").get<unsigned>(),
                                        g.at("depth").get<unsigned>(),
                                        parse_selector(g.value("selector", "lowest")));
        } else {
            std::vector<unsigned> degrees = jd.at("degrees").get<std::vector<unsigned>>();
            std::vector<ColumnSet> selections;
            for (const auto& sel : jd.at("selections"))
                selections.emplace_back(sel.get<std::vector<long>>());
            diagram = LacunarityDiagram::make(std::move(degrees), std::move(selections));
        }

        // The curve constructor may have swapped P1 and P2 into the
        // canonical orientation; column selections follow suit.
        if (curve.swapped) diagram = reflect_columns(diagram);

        ProblemOptions options;
        if (root.contains("options")) {
            const json& jo = root.at("options");
            options.condition = jo.value("condition", options.condition);
            options.radius = jo.value("radius", options.radius);
            options.samples = jo.value("samples", options.samples);
            options.seed = jo.value("seed", options.seed);
            options.precision = jo.value("precision", options.precision);
        }
        return ProblemConfig{std::move(curve), std::move(diagram), std::move(options)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed config: ") + e.what());
    }
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ConditionTag resolve_condition(const ProblemConfig& config) {
    const std::string& which = config.options.condition;
    const bool equal_mult = config.curve.nu1 == config.curve.nu2;
    if (which == "auto") return pick_condition(config.diagram, config.curve);
    ConditionKind kind;
    if (which == "l1")
        kind = ConditionKind::L1;
    else if (which == "l2")
        kind = equal_mult ? ConditionKind::L2a : ConditionKind::L2b;
    else if (which == "l3")
        kind = equal_mult ? ConditionKind::L3a : ConditionKind::L3b;
    else
        throw ParseError("unknown condition '" + which + "'");
    return check_condition(config.diagram, config.curve, kind);
}

}  // namespace lacuna
