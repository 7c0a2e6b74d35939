#include "brmcda/service.hpp"

#include <cmath>
#include <optional>

#include "httplib.h"

#include "brmcda/case_study.hpp"
#include "brmcda/contours.hpp"
#include "brmcda/io.hpp"

namespace brmcda::service {

using nlohmann::json;

namespace {

Response bad_request(const FieldError& e) {
    return {400, {{"error", e.what()}, {"field", e.field()}}};
}

Response unprocessable(const std::exception& e) { return {422, {{"error", e.what()}}}; }

json parse_body(const std::string& body) {
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw FieldError("$", std::string("invalid JSON: ") + e.what());
    }
}

double number_field(const json& obj, const char* key, std::optional<double> fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (!fallback) throw FieldError(key, "is required");
        return *fallback;
    }
    if (!it->is_number() || !std::isfinite(it->get<double>()))
        throw FieldError(key, "expected a finite number");
    return it->get<double>();
}

Model model_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw FieldError(key, "is required");
    if (!it->is_string()) throw FieldError(key, "expected a string");
    try {
        return parse_model(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FieldError(key, e.what());
    }
}

json mapping_json(const MappingResult& m) {
    json j = to_json(m);
    j["midpoint_slope"] = m.weights.size() == 2 ? number_or_null(midpoint_slope(m.weights))
                                                 : json(nullptr);
    return j;
}

}  // namespace

Response assess(const std::string& body, const Config& config) {
    AssessRequest req;
    try {
        req = parse_assess_request(parse_body(body));
        if (req.config.samples > config.sample_cap)
            throw FieldError("samples", "exceeds the per-request cap of " +
                                            std::to_string(config.sample_cap));
    } catch (const FieldError& e) {
        return bad_request(e);
    }
    try {
        return {200, to_json(req.dataset, brmcda::assess(req.dataset, req.config))};
    } catch (const std::invalid_argument& e) {
        return unprocessable(e);
    }
}

Response map_weights(const std::string& body) {
    std::vector<double> linear;
    double c = kDefaultInteractionMass;
    std::vector<Model> models(kAllModels.begin(), kAllModels.end());
    try {
        const json j = parse_body(body);
        if (!j.is_object()) throw FieldError("$", "request body must be a JSON object");
        auto it = j.find("linear");
        if (it == j.end()) throw FieldError("linear", "is required");
        if (!it->is_array() || it->empty()) throw FieldError("linear", "expected a non-empty array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& w = (*it)[k];
            if (!w.is_number() || !std::isfinite(w.get<double>()))
                throw FieldError("linear[" + std::to_string(k) + "]", "expected a finite number");
            linear.push_back(w.get<double>());
        }
        c = number_field(j, "c", kDefaultInteractionMass);
        if (c < 0.0 || c > 1.0) throw FieldError("c", "must lie in [0, 1]");
        if (j.contains("model")) models = {model_field(j, "model")};
    } catch (const FieldError& e) {
        return bad_request(e);
    }
    try {
        json out = {{"linear", linear}, {"c", c}, {"mappings", json::array()}};
        for (Model model : models)
            out["mappings"].push_back(mapping_json(map_weight_vector({linear, c, model})));
        return {200, out};
    } catch (const std::invalid_argument& e) {
        return unprocessable(e);
    }
}

Response contours(const std::string& body) {
    Model model;
    double w = 0.0;
    double c = kDefaultInteractionMass;
    std::size_t grid = 101;
    try {
        const json j = parse_body(body);
        if (!j.is_object()) throw FieldError("$", "request body must be a JSON object");
        model = model_field(j, "model");
        w = number_field(j, "w", std::nullopt);
        c = number_field(j, "c", kDefaultInteractionMass);
        if (auto it = j.find("grid"); it != j.end()) {
            if (!it->is_number_integer()) throw FieldError("grid", "expected an integer");
            const long g = it->get<long>();
            if (g < 2 || g > static_cast<long>(kMaxServiceGrid))
                throw FieldError("grid", "must lie in [2, " + std::to_string(kMaxServiceGrid) + "]");
            grid = static_cast<std::size_t>(g);
        }
    } catch (const FieldError& e) {
        return bad_request(e);
    }
    try {
        const WeightSet ws = two_criterion_weights(model, w, c);
        json out = to_json(loss_grid(ws, grid));
        out["midpoint_slope"] = midpoint_slope(ws);
        return {200, out};
    } catch (const std::invalid_argument& e) {
        return unprocessable(e);
    }
}

Response case_study() {
    json out = to_json(case_study::dataset());
    json scenarios = json::array();
    for (const auto& s : case_study::scenarios())
        scenarios.push_back({{"id", s.id}, {"linear_weights", s.linear_weights}});
    out["scenarios"] = scenarios;
    out["defaults"] = {{"interaction_mass", kDefaultInteractionMass},
                       {"psi", kDefaultPsi},
                       {"samples", kDefaultCaseStudySamples},
                       {"seed", kDefaultSeed}};
    return {200, out};
}

void install(httplib::Server& server, const Config& config) {
    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server.Post("/assess", [config, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, assess(req.body, config));
    });
    server.Post("/map-weights", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, map_weights(req.body));
    });
    server.Post("/contours", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, contours(req.body));
    });
    server.Get("/case-study", [reply](const httplib::Request&, httplib::Response& res) {
        reply(res, case_study());
    });
    server.Get("/health", [reply](const httplib::Request&, httplib::Response& res) {
        reply(res, {200, {{"status", "ok"}}});
    });
    server.set_exception_handler(
        [reply](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
            std::string what = "internal error";
            try {
                std::rethrow_exception(ep);
            } catch (const std::exception& e) {
                what = e.what();
            } catch (...) {
            }
            reply(res, {500, {{"error", what}}});
        });
    if (!config.static_dir.empty() && !server.set_mount_point("/", config.static_dir))
        throw std::invalid_argument("static directory not found: " + config.static_dir);
}

bool serve(const Config& config) {
    httplib::Server server;
    const unsigned workers = config.workers == 0 ? 1 : config.workers;
    server.new_task_queue = [workers] { return new httplib::ThreadPool(workers); };
    install(server, config);
    return server.listen(config.host, config.port);
}

}  // namespace brmcda::service
