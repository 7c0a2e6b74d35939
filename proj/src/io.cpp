#include "brmcda/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace brmcda {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw FieldError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw FieldError(path.empty() ? key : path + "." + key, "is required");
    return *it;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) throw FieldError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw FieldError(path, "must be finite");
    return d;
}

long as_count(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw FieldError(path, "expected an integer");
    return v.get<long>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw FieldError(path, "expected a string");
    return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw FieldError(path, "expected an array");
    return v;
}

}  // namespace

AssessRequest parse_assess_request(const json& body, bool require_model) {
    if (!body.is_object()) throw FieldError("$", "request body must be a JSON object");
    AssessRequest req;
    Dataset& d = req.dataset;

    const json& criteria = as_array(require(body, "criteria", ""), "criteria");
    if (criteria.empty()) throw FieldError("criteria", "at least one criterion required");
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        const std::string p = index("criteria", j);
        const json& c = criteria[j];
        CriterionSpec spec;
        spec.name = as_string(require(c, "name", p), join(p, "name"));
        try {
            spec.kind = parse_criterion_kind(as_string(require(c, "kind", p), join(p, "kind")));
        } catch (const FieldError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw FieldError(join(p, "kind"), e.what());
        }
        spec.most_preferable =
            as_number(require(c, "most_preferable", p), join(p, "most_preferable"));
        spec.least_preferable =
            as_number(require(c, "least_preferable", p), join(p, "least_preferable"));
        try {
            spec.validate();
        } catch (const std::invalid_argument& e) {
            throw FieldError(join(p, "most_preferable"), e.what());
        }
        d.criteria.push_back(std::move(spec));
        d.linear_weights.push_back(
            as_number(require(c, "linear_weight", p), join(p, "linear_weight")));
    }

    const json& arms = as_array(require(body, "arms", ""), "arms");
    if (arms.size() < 2) throw FieldError("arms", "at least two arms required");
    for (std::size_t a = 0; a < arms.size(); ++a) {
        const std::string p = index("arms", a);
        Arm arm;
        arm.name = as_string(require(arms[a], "name", p), join(p, "name"));
        const std::string op = join(p, "outcomes");
        const json& outcomes = as_array(require(arms[a], "outcomes", p), op);
        if (outcomes.size() != d.criteria.size())
            throw FieldError(op, "expected " + std::to_string(d.criteria.size()) +
                                     " outcomes (one per criterion), got " +
                                     std::to_string(outcomes.size()));
        for (std::size_t j = 0; j < outcomes.size(); ++j) {
            const std::string q = index(op, j);
            BinomialOutcome o;
            o.events = as_count(require(outcomes[j], "events", q), join(q, "events"));
            o.patients = as_count(require(outcomes[j], "patients", q), join(q, "patients"));
            if (o.patients <= 0) throw FieldError(join(q, "patients"), "must be positive");
            if (o.events < 0 || o.events > o.patients)
                throw FieldError(join(q, "events"), "must lie in [0, patients]");
            arm.outcomes.push_back(o);
        }
        d.arms.push_back(std::move(arm));
    }

    AssessConfig& cfg = req.config;
    if (auto it = body.find("model"); it != body.end()) {
        try {
            cfg.model = parse_model(as_string(*it, "model"));
        } catch (const FieldError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw FieldError("model", e.what());
        }
    } else if (require_model) {
        throw FieldError("model", "is required");
    }
    if (auto it = body.find("interaction_mass"); it != body.end()) {
        cfg.interaction_mass = as_number(*it, "interaction_mass");
        if (cfg.interaction_mass < 0.0 || cfg.interaction_mass > 1.0)
            throw FieldError("interaction_mass", "must lie in [0, 1]");
    }
    if (auto it = body.find("psi"); it != body.end()) {
        cfg.psi = as_number(*it, "psi");
        if (cfg.psi < 0.5 || cfg.psi > 1.0) throw FieldError("psi", "must lie in [0.5, 1]");
    }
    if (auto it = body.find("samples"); it != body.end()) {
        const long m = as_count(*it, "samples");
        if (m <= 0) throw FieldError("samples", "must be positive");
        cfg.samples = static_cast<std::size_t>(m);
    }
    if (auto it = body.find("seed"); it != body.end()) {
        if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0))
            throw FieldError("seed", "expected a non-negative integer");
        cfg.seed = it->get<std::uint64_t>();
    }
    return req;
}

AssessRequest load_assess_request(const std::filesystem::path& path, bool require_model) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file " + path.string());
    json body;
    try {
        body = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FieldError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_assess_request(body, require_model);
}

json number_or_null(double value) {
    if (std::isfinite(value)) return value;
    return nullptr;
}

json to_json(const Summary& s) {
    return {{"mean", s.mean}, {"lower", s.lower}, {"upper", s.upper}};
}

json to_json(const Dataset& d) {
    json criteria = json::array();
    for (std::size_t j = 0; j < d.criteria.size(); ++j) {
        const auto& c = d.criteria[j];
        criteria.push_back({{"name", c.name},
                            {"kind", std::string(to_string(c.kind))},
                            {"most_preferable", c.most_preferable},
                            {"least_preferable", c.least_preferable},
                            {"linear_weight", d.linear_weights[j]}});
    }
    json arms = json::array();
    for (const auto& a : d.arms) {
        json outcomes = json::array();
        for (const auto& o : a.outcomes)
            outcomes.push_back({{"events", o.events}, {"patients", o.patients}});
        arms.push_back({{"name", a.name}, {"outcomes", outcomes}});
    }
    return {{"criteria", criteria}, {"arms", arms}};
}

json to_json(const Dataset& d, const AssessConfig& cfg) {
    json j = to_json(d);
    j["model"] = std::string(to_string(cfg.model));
    j["interaction_mass"] = cfg.interaction_mass;
    j["psi"] = cfg.psi;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    return j;
}

json to_json(const MappingResult& m) {
    return {{"model", std::string(to_string(m.weights.model))},
            {"weights", m.weights.weights},
            {"interaction_mass", m.weights.interaction_mass},
            {"floored", m.floored}};
}

json to_json(const Dataset& d, const AssessResult& r) {
    json out;
    out["config"] = {{"model", std::string(to_string(r.config.model))},
                     {"interaction_mass", r.config.interaction_mass},
                     {"psi", r.config.psi},
                     {"samples", r.config.samples},
                     {"seed", r.config.seed}};
    json weights = to_json(r.weights);
    weights["linear"] = d.linear_weights;
    out["weights"] = weights;

    json posteriors = json::array();
    for (std::size_t a = 0; a < r.summaries.size(); ++a)
        for (std::size_t j = 0; j < r.summaries[a].size(); ++j)
            posteriors.push_back({{"arm", d.arms[a].name},
                                  {"criterion", d.criteria[j].name},
                                  {"xi", to_json(r.summaries[a][j].performance)},
                                  {"u", to_json(r.summaries[a][j].partial_value)}});
    out["posteriors"] = posteriors;

    json comparisons = json::array();
    for (const auto& p : r.comparisons)
        comparisons.push_back({{"first", d.arms[p.first].name},
                               {"second", d.arms[p.second].name},
                               {"probability", p.result.probability},
                               {"decision", std::string(to_string(p.result.decision))},
                               {"threshold", p.result.threshold},
                               {"n_samples", p.result.n_samples},
                               {"wins_first", p.result.wins_first},
                               {"wins_second", p.result.wins_second},
                               {"ties", p.result.ties}});
    out["comparisons"] = comparisons;
    return out;
}

json to_json(const LossGrid& g) {
    json rows = json::array();
    for (std::size_t b = 0; b < g.size; ++b) {
        json row = json::array();
        for (std::size_t r = 0; r < g.size; ++r) row.push_back(number_or_null(g.at(b, r)));
        rows.push_back(row);
    }
    return {{"model", std::string(to_string(g.weights.model))},
            {"weights", g.weights.weights},
            {"interaction_mass", g.weights.interaction_mass},
            {"grid", g.size},
            {"axis", g.axis},
            {"loss", rows}};
}

}  // namespace brmcda
