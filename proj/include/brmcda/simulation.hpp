#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "brmcda/correlated.hpp"
#include "brmcda/models.hpp"

namespace brmcda::sim {

// Two-arm, two-criterion trial study: T1 has one of nine fixed
// (benefit, risk) event probabilities; T2 ranges over the 9 x 9 grid
// {0.1, ..., 0.9}^2. Partial values are u_1 = theta and u_2 = 1 - theta with
// equal linear weights.

struct Profile {
    double benefit = 0.5;
    double risk = 0.5;
};

inline constexpr int kScenarioCount = 9;
inline constexpr int kGridSide = 9;
inline constexpr int kCellsPerScenario = kGridSide * kGridSide;

// Scenario ids are 1-based.
Profile t1_profile(int scenario_id);

// Grid index 0..8 -> 0.1..0.9.
constexpr double grid_value(int index) { return (index + 1) / 10.0; }
std::optional<int> grid_index(double value);

struct Settings {
    long n_patients = 100;
    std::size_t posterior_samples = 2000;
    std::size_t trials = 2500;
    double psi = 0.8;
    double interaction_mass = 0.2;
    double rho = 0.0;
    std::uint64_t seed = 1;
    unsigned jobs = 0;  // 0: hardware concurrency

    void validate() const;
};

// Mapped weights of the four models for equal linear weights, in
// kAllModels order.
std::array<WeightSet, 4> equal_weight_sets(double interaction_mass);

using ModelProbabilities = std::array<double, 4>;  // kAllModels order

// Everything that is fixed across the trials of one (T1, T2) cell.
class TrialSetup {
public:
    TrialSetup(Profile t1, Profile t2, const Settings& settings);

    // P(T1 beats T2) under each model, all scored on the same posterior
    // draws. The trial's randomness comes entirely from `trial_seed`.
    ModelProbabilities run(std::uint64_t trial_seed) const;

    const CorrelatedBinaryPair& generator(int arm) const { return generators_[arm]; }

private:
    std::array<CorrelatedBinaryPair, 2> generators_;
    std::array<WeightSet, 4> weights_;
    long n_patients_;
    std::size_t posterior_samples_;
};

ModelProbabilities simulate_trial(Profile t1, Profile t2, const Settings& settings,
                                  std::uint64_t trial_seed);

// Seed of one trial; independent of rho so that correlated and uncorrelated
// runs share common random numbers.
std::uint64_t trial_seed(std::uint64_t master, int scenario_id, int benefit_index,
                         int risk_index, std::size_t trial);

struct CellResult {
    int scenario_id = 1;
    int benefit_index = 0;  // T2 benefit probability = grid_value(benefit_index)
    int risk_index = 0;
    std::size_t trials = 0;
    std::array<std::size_t, 4> recommend_t1{};  // trials with P > psi
    std::array<std::size_t, 4> recommend_t2{};  // trials with P < 1 - psi

    double p_rec_t1(std::size_t model) const;
    double p_rec_t2(std::size_t model) const;
};

struct RecommendationGrid {
    Settings settings;
    std::vector<int> scenarios;
    std::vector<CellResult> cells;  // scenario-major, then benefit, then risk

    const CellResult& cell(int scenario_id, int benefit_index, int risk_index) const;
};

struct CellRef {
    int scenario_id;
    int benefit_index;
    int risk_index;
};
// Runs the given cells on `settings.jobs` worker threads. Output order
// matches input order and does not depend on the thread count.
std::vector<CellResult> run_cells(const std::vector<CellRef>& cells, const Settings& settings);

RecommendationGrid run_grid(const Settings& settings, const std::vector<int>& scenarios);

// phi_{X-Y} = P(rec T1 | X) - P(rec T1 | Y) for the six model pairs.
struct ModelPair {
    Model x;
    Model y;
};
inline constexpr std::array<ModelPair, 6> kPhiPairs = {{
    {Model::product, Model::linear},
    {Model::multilinear, Model::linear},
    {Model::multilinear, Model::product},
    {Model::slos, Model::linear},
    {Model::slos, Model::product},
    {Model::slos, Model::multilinear},
}};

struct PhiCell {
    int scenario_id;
    int benefit_index;
    int risk_index;
    std::array<double, 6> phi;  // kPhiPairs order
};

std::vector<PhiCell> difference_grid(const RecommendationGrid& grid);

struct SensitivityRow {
    int scenario_id;
    std::array<int, 4> count_2_5{};  // cells with |change| >= 2.5%
    std::array<int, 4> count_5{};    // cells with |change| >= 5%
    int total = kCellsPerScenario;
};

struct SensitivityResult {
    double rho = 0.0;
    std::vector<SensitivityRow> rows;
    std::array<int, 4> total_2_5{};
    std::array<int, 4> total_5{};
    int total = 0;
};

// Compares T1-recommendation proportions of two grids run with the same seed
// and settings except rho.
SensitivityResult compare_grids(const RecommendationGrid& base, const RecommendationGrid& other);

SensitivityResult correlation_sensitivity(const Settings& settings, double rho,
                                          const std::vector<int>& scenarios);

std::size_t model_index(Model model);

}  // namespace brmcda::sim
