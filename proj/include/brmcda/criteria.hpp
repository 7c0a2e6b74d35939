#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brmcda {

enum class CriterionKind { benefit, risk };

std::string_view to_string(CriterionKind kind);
CriterionKind parse_criterion_kind(std::string_view text);

// A benefit or risk criterion normalised between its least preferable value
// (partial value 0) and its most preferable value (partial value 1).
struct CriterionSpec {
    std::string name;
    CriterionKind kind = CriterionKind::benefit;
    double most_preferable = 1.0;
    double least_preferable = 0.0;

    // Throws std::invalid_argument when the bounds are equal or point the
    // wrong way for the criterion kind.
    void validate() const;
};

// Linear partial value function, clamped to [0, 1].
double partial_value(const CriterionSpec& spec, double xi);

// Element-wise partial values for one treatment's performance vector.
std::vector<double> partial_values(std::span<const CriterionSpec> specs,
                                   std::span<const double> performance);

}  // namespace brmcda
