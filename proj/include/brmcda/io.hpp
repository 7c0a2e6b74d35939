#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "brmcda/assessment.hpp"
#include "brmcda/contours.hpp"

namespace brmcda {

// Malformed input, tagged with the JSON path of the offending field
// (e.g. "arms[1].outcomes[0].events").
class FieldError : public std::invalid_argument {
public:
    FieldError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct AssessRequest {
    Dataset dataset;
    AssessConfig config;
};

// Dataset file / request body:
//   { criteria: [{name, kind, most_preferable, least_preferable, linear_weight}],
//     arms: [{name, outcomes: [{events, patients}]}],
//     model, interaction_mass?, psi?, samples?, seed? }
// Throws FieldError. Weights are checked for shape only; feasibility is left
// to the mapping step.
AssessRequest parse_assess_request(const nlohmann::json& body, bool require_model = true);
AssessRequest load_assess_request(const std::filesystem::path& path, bool require_model = true);

nlohmann::json to_json(const Dataset& dataset);
nlohmann::json to_json(const Dataset& dataset, const AssessConfig& config);
nlohmann::json to_json(const Dataset& dataset, const AssessResult& result);
nlohmann::json to_json(const MappingResult& mapping);
nlohmann::json to_json(const LossGrid& grid);
nlohmann::json to_json(const Summary& summary);

// Non-finite numbers as JSON null.
nlohmann::json number_or_null(double value);

}  // namespace brmcda
