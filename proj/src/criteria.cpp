#include "brmcda/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace brmcda {

std::string_view to_string(CriterionKind kind) {
    return kind == CriterionKind::benefit ? "benefit" : "risk";
}

CriterionKind parse_criterion_kind(std::string_view text) {
    if (text == "benefit") return CriterionKind::benefit;
    if (text == "risk") return CriterionKind::risk;
    throw std::invalid_argument("unknown criterion kind '" + std::string(text) +
                                "' (expected benefit or risk)");
}

void CriterionSpec::validate() const {
    if (!std::isfinite(most_preferable) || !std::isfinite(least_preferable))
        throw std::invalid_argument("criterion '" + name + "': bounds must be finite");
    if (most_preferable == least_preferable)
        throw std::invalid_argument("criterion '" + name +
                                    "': most_preferable equals least_preferable");
    if (kind == CriterionKind::benefit && most_preferable < least_preferable)
        throw std::invalid_argument("criterion '" + name +
                                    "': benefit needs most_preferable > least_preferable");
    if (kind == CriterionKind::risk && most_preferable > least_preferable)
        throw std::invalid_argument("criterion '" + name +
                                    "': risk needs most_preferable < least_preferable");
}

double partial_value(const CriterionSpec& spec, double xi) {
    const double u =
        (xi - spec.least_preferable) / (spec.most_preferable - spec.least_preferable);
    return std::clamp(u, 0.0, 1.0);
}

std::vector<double> partial_values(std::span<const CriterionSpec> specs,
                                   std::span<const double> performance) {
    if (specs.size() != performance.size())
        throw std::invalid_argument("partial_values: criterion count mismatch");
    std::vector<double> out(specs.size());
    for (std::size_t j = 0; j < specs.size(); ++j)
        out[j] = partial_value(specs[j], performance[j]);
    return out;
}

}  // namespace brmcda
