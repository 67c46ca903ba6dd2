#include "woi/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace woi {

namespace {

using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& known,
                         const std::string& scope)
{
    for (const auto& item : obj.items()) {
        if (!known.contains(item.key()))
            throw std::invalid_argument("config: unknown key '" + scope + item.key() + "'");
    }
}

double require_number(const ordered_json& v, const std::string& key)
{
    if (!v.is_number())
        throw std::invalid_argument("config: key '" + key + "' must be a number");
    return v.get<double>();
}

int require_int(const ordered_json& v, const std::string& key)
{
    if (!v.is_number_integer())
        throw std::invalid_argument("config: key '" + key + "' must be an integer");
    return v.get<int>();
}

std::vector<double> require_number_array(const ordered_json& v, const std::string& key)
{
    if (!v.is_array() || v.empty())
        throw std::invalid_argument("config: key '" + key + "' must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : v)
        out.push_back(require_number(e, key));
    return out;
}

Concept parse_concept(const ordered_json& j, std::size_t index)
{
    const std::string scope = "concepts[" + std::to_string(index) + "].";
    if (!j.is_object())
        throw std::invalid_argument("config: concepts entries must be objects");
    reject_unknown_keys(j, {"id", "kind", "n", "domain", "scale", "offset"}, scope);
    for (const char* key : {"id", "kind", "scale", "offset"}) {
        if (!j.contains(key))
            throw std::invalid_argument("config: missing key '" + scope + key + "'");
    }
    Concept c;
    c.id = j.at("id").get<std::string>();
    const TestFunctionKind kind = test_function_kind_from_string(j.at("kind").get<std::string>());
    const int default_n = kind == TestFunctionKind::SCH1 ? 1 : 30;
    const int n = j.contains("n") ? require_int(j.at("n"), scope + "n") : default_n;
    c.function = TestFunction::make(kind, n);
    if (j.contains("domain")) {
        const auto box = require_number_array(j.at("domain"), scope + "domain");
        if (box.size() != 2)
            throw std::invalid_argument("config: key '" + scope + "domain' must be [lower, upper]");
        c.function.lower.assign(static_cast<std::size_t>(n), box[0]);
        c.function.upper.assign(static_cast<std::size_t>(n), box[1]);
        c.function.validate();
    }
    c.transform.scale = require_number_array(j.at("scale"), scope + "scale");
    c.transform.offset = require_number_array(j.at("offset"), scope + "offset");
    c.validate();
    return c;
}

GAParams parse_ga(const ordered_json& j)
{
    GAParams ga;
    if (j.is_null())
        return ga;
    if (!j.is_object())
        throw std::invalid_argument("config: key 'ga' must be an object");
    reject_unknown_keys(j, {"N", "p_c", "p_m", "eta_c", "eta_m", "n_r", "tournament_size"}, "ga.");
    if (j.contains("N")) ga.N = require_int(j.at("N"), "ga.N");
    if (j.contains("p_c")) ga.p_c = require_number(j.at("p_c"), "ga.p_c");
    if (j.contains("p_m")) ga.p_m = require_number(j.at("p_m"), "ga.p_m");
    if (j.contains("eta_c")) ga.eta_c = require_number(j.at("eta_c"), "ga.eta_c");
    if (j.contains("eta_m")) ga.eta_m = require_number(j.at("eta_m"), "ga.eta_m");
    if (j.contains("n_r")) ga.n_r = require_int(j.at("n_r"), "ga.n_r");
    if (j.contains("tournament_size"))
        ga.tournament_size = require_int(j.at("tournament_size"), "ga.tournament_size");
    ga.validate();
    return ga;
}

AllocationPolicy parse_policy(const ordered_json& j)
{
    AllocationPolicy policy;
    if (j.is_null())
        return policy;
    if (!j.is_object())
        throw std::invalid_argument("config: key 'policy' must be an object");
    reject_unknown_keys(j, {"gq0", "quotas", "category_sizes"}, "policy.");
    if (j.contains("gq0")) policy.gq0 = require_int(j.at("gq0"), "policy.gq0");
    if (j.contains("quotas")) {
        policy.quotas.clear();
        for (const auto& q : j.at("quotas"))
            policy.quotas.push_back(require_int(q, "policy.quotas"));
    }
    if (j.contains("category_sizes")) {
        const auto& cs = j.at("category_sizes");
        if (cs.is_string()) {
            if (cs.get<std::string>() != "proportional")
                throw std::invalid_argument(
                    "config: policy.category_sizes must be 'proportional' or an integer array");
        } else {
            for (const auto& s : cs)
                policy.category_sizes.push_back(require_int(s, "policy.category_sizes"));
        }
    }
    policy.validate();
    return policy;
}

} // namespace

void ExperimentSpec::validate() const
{
    if (repetitions < 1)
        throw std::invalid_argument("repetitions: must be at least 1");
    base.validate();
}

ExperimentSpec parse_config_text(const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + err.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config: document must be a JSON object");
    reject_unknown_keys(doc, {"concepts", "woi", "target_l", "budget", "ga", "policy", "mode", "seed"},
                        "");
    for (const char* key : {"concepts", "woi"}) {
        if (!doc.contains(key))
            throw std::invalid_argument("config: missing key '" + std::string(key) + "'");
    }

    ExperimentSpec spec;
    RunConfig& cfg = spec.base;

    const auto& concepts = doc.at("concepts");
    if (concepts.is_string()) {
        const std::string name = concepts.get<std::string>();
        if (name == "case1")
            cfg.portfolio = portfolio_case1();
        else if (name == "case2")
            cfg.portfolio = portfolio_case2();
        else
            throw std::invalid_argument("config: unknown portfolio name '" + name + "'");
    } else if (concepts.is_array()) {
        for (std::size_t i = 0; i < concepts.size(); ++i)
            cfg.portfolio.push_back(parse_concept(concepts[i], i));
    } else {
        throw std::invalid_argument("config: key 'concepts' must be a portfolio name or an array");
    }

    cfg.woi_limits = require_number_array(doc.at("woi"), "woi");
    if (doc.contains("target_l")) cfg.target_l = require_int(doc.at("target_l"), "target_l");
    if (doc.contains("budget"))
        cfg.budget = static_cast<std::int64_t>(require_int(doc.at("budget"), "budget"));
    cfg.ga = parse_ga(doc.contains("ga") ? doc.at("ga") : ordered_json());
    cfg.policy = parse_policy(doc.contains("policy") ? doc.at("policy") : ordered_json());
    if (doc.contains("mode"))
        cfg.mode = run_mode_from_string(doc.at("mode").get<std::string>());
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_integer())
            throw std::invalid_argument("config: key 'seed' must be an integer");
        cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    cfg.ga.rng_seed = cfg.seed; // for callers driving the engine directly

    spec.validate();
    return spec;
}

ExperimentSpec load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string preset_config_text(const std::string& name)
{
    if (name == "case1") {
        return R"({
  "concepts": "case1",
  "woi": [0.2, 0.5],
  "target_l": 1,
  "budget": 9000,
  "ga": {"N": 20, "p_c": 0.9, "n_r": 10},
  "policy": {"gq0": 10, "quotas": [10, 3, 1], "category_sizes": "proportional"},
  "mode": "simultaneous",
  "seed": 1
})";
    }
    if (name == "case2") {
        return R"({
  "concepts": "case2",
  "woi": [0.3, 0.4],
  "target_l": 2,
  "budget": 9000,
  "ga": {"N": 20, "p_c": 0.9, "n_r": 10},
  "policy": {"gq0": 10, "quotas": [10, 3, 1], "category_sizes": "proportional"},
  "mode": "simultaneous",
  "seed": 1
})";
    }
    if (name.rfind("single:", 0) == 0) {
        const std::string rest = name.substr(7);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("preset: expected single:<function>:<limit,limit,...>");
        const std::string fn = rest.substr(0, colon);
        const std::string limits = rest.substr(colon + 1);
        if (fn.empty() || limits.empty())
            throw std::invalid_argument("preset: expected single:<function>:<limit,limit,...>");
        const TestFunctionKind kind = test_function_kind_from_string(fn);
        std::string woi = "[";
        std::size_t dims = 0;
        std::istringstream parts(limits);
        std::string tok;
        while (std::getline(parts, tok, ',')) {
            (void)std::stod(tok); // validate each limit parses as a number
            if (dims++ > 0)
                woi += ", ";
            woi += tok;
        }
        woi += "]";
        if (dims == 0)
            throw std::invalid_argument("preset: window limits must not be empty");
        std::string scale = "[1";
        std::string offset = "[0";
        for (std::size_t i = 1; i < dims; ++i) {
            scale += ", 1";
            offset += ", 0";
        }
        scale += "]";
        offset += "]";
        std::ostringstream out;
        out << "{\n"
            << "  \"concepts\": [{\"id\": \"" << to_string(kind) << "\", \"kind\": \""
            << to_string(kind) << "\", \"n\": " << (kind == TestFunctionKind::SCH1 ? 1 : 30)
            << ", \"scale\": " << scale << ", \"offset\": " << offset << "}],\n"
            << "  \"woi\": " << woi << ",\n"
            << "  \"target_l\": 1,\n"
            << "  \"budget\": 1000,\n"
            << "  \"ga\": {\"N\": 20, \"p_c\": 0.9, \"n_r\": 10},\n"
            << "  \"mode\": \"simultaneous\",\n"
            << "  \"seed\": 1\n"
            << "}";
        return out.str();
    }
    throw std::invalid_argument("preset: unknown preset '" + name
                                + "' (expected case1, case2 or single:<fn>:<woi>)");
}

ExperimentSpec preset_spec(const std::string& name)
{
    return parse_config_text(preset_config_text(name));
}

} // namespace woi
