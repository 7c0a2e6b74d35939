#include "brmcda/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "brmcda/comparison.hpp"
#include "brmcda/criteria.hpp"
#include "brmcda/mapping.hpp"
#include "brmcda/posterior.hpp"
#include "brmcda/rng.hpp"

namespace brmcda::sim {

namespace {

constexpr std::array<Profile, kScenarioCount> kProfiles = {{
    {0.5, 0.5},
    {0.3, 0.7},
    {0.7, 0.3},
    {0.1, 0.1},
    {0.9, 0.9},
    {0.3, 0.3},
    {0.7, 0.7},
    {0.9, 0.1},
    {0.1, 0.9},
}};

const CriterionSpec kBenefit{"benefit", CriterionKind::benefit, 1.0, 0.0};
const CriterionSpec kRisk{"risk", CriterionKind::risk, 0.0, 1.0};

unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

Profile t1_profile(int scenario_id) {
    if (scenario_id < 1 || scenario_id > kScenarioCount)
        throw std::invalid_argument("scenario id must be in 1..9 (got " +
                                    std::to_string(scenario_id) + ")");
    return kProfiles[static_cast<std::size_t>(scenario_id - 1)];
}

std::optional<int> grid_index(double value) {
    const double scaled = value * 10.0 - 1.0;
    const long idx = std::lround(scaled);
    if (idx < 0 || idx >= kGridSide || std::abs(scaled - static_cast<double>(idx)) > 1e-9)
        return std::nullopt;
    return static_cast<int>(idx);
}

void Settings::validate() const {
    if (n_patients <= 0) throw std::invalid_argument("n_patients must be positive");
    if (posterior_samples == 0) throw std::invalid_argument("posterior_samples must be positive");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    validate_threshold(psi);
    if (!(interaction_mass >= 0.0 && interaction_mass <= 1.0))
        throw std::invalid_argument("interaction_mass must lie in [0, 1]");
    if (!(rho >= -1.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [-1, 1]");
}

std::size_t model_index(Model model) {
    for (std::size_t i = 0; i < kAllModels.size(); ++i)
        if (kAllModels[i] == model) return i;
    throw std::logic_error("model_index: bad model");
}

std::array<WeightSet, 4> equal_weight_sets(double interaction_mass) {
    std::array<WeightSet, 4> out;
    for (std::size_t i = 0; i < kAllModels.size(); ++i)
        out[i] = map_weight_vector({{0.5, 0.5}, interaction_mass, kAllModels[i]}).weights;
    return out;
}

TrialSetup::TrialSetup(Profile t1, Profile t2, const Settings& settings)
    : generators_{CorrelatedBinaryPair(t1.benefit, t1.risk, settings.rho),
                  CorrelatedBinaryPair(t2.benefit, t2.risk, settings.rho)},
      weights_(equal_weight_sets(settings.interaction_mass)),
      n_patients_(settings.n_patients),
      posterior_samples_(settings.posterior_samples) {}

ModelProbabilities TrialSetup::run(std::uint64_t seed) const {
    std::array<PvfSamples, 2> pvf;
    std::vector<double> draws;
    for (std::size_t arm = 0; arm < 2; ++arm) {
        Rng patients(seed, {0, arm});
        const PairCounts counts = generators_[arm].draw_counts(patients, n_patients_);
        const BinomialOutcome outcomes[2] = {{counts.first(), n_patients_},
                                             {counts.second(), n_patients_}};
        const CriterionSpec* specs[2] = {&kBenefit, &kRisk};
        pvf[arm] = PvfSamples(2, posterior_samples_);
        for (std::size_t j = 0; j < 2; ++j) {
            Rng rng(seed, {1, arm, j});
            draw_samples(posterior_from_counts(outcomes[j]), rng, draws, posterior_samples_);
            for (std::size_t k = 0; k < posterior_samples_; ++k)
                pvf[arm].at(k, j) = partial_value(*specs[j], draws[k]);
        }
    }
    ModelProbabilities out{};
    for (std::size_t m = 0; m < weights_.size(); ++m) {
        const auto s1 = score_draws(pvf[0], weights_[m]);
        const auto s2 = score_draws(pvf[1], weights_[m]);
        // psi only affects the decision, not the probability.
        out[m] = compare_scores(s1, s2, native_flavor(weights_[m].model), 0.5).probability;
    }
    return out;
}

ModelProbabilities simulate_trial(Profile t1, Profile t2, const Settings& settings,
                                  std::uint64_t seed) {
    settings.validate();
    return TrialSetup(t1, t2, settings).run(seed);
}

std::uint64_t trial_seed(std::uint64_t master, int scenario_id, int benefit_index,
                         int risk_index, std::size_t trial) {
    return stream_seed(master, {static_cast<std::uint64_t>(scenario_id),
                                static_cast<std::uint64_t>(benefit_index),
                                static_cast<std::uint64_t>(risk_index), trial});
}

double CellResult::p_rec_t1(std::size_t model) const {
    return static_cast<double>(recommend_t1[model]) / static_cast<double>(trials);
}

double CellResult::p_rec_t2(std::size_t model) const {
    return static_cast<double>(recommend_t2[model]) / static_cast<double>(trials);
}

const CellResult& RecommendationGrid::cell(int scenario_id, int benefit_index,
                                           int risk_index) const {
    for (const auto& c : cells)
        if (c.scenario_id == scenario_id && c.benefit_index == benefit_index &&
            c.risk_index == risk_index)
            return c;
    throw std::out_of_range("grid has no cell for scenario " + std::to_string(scenario_id));
}

std::vector<CellResult> run_cells(const std::vector<CellRef>& cells, const Settings& settings) {
    settings.validate();
    std::vector<CellResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const CellRef& ref = cells[i];
            const Profile t2{grid_value(ref.benefit_index), grid_value(ref.risk_index)};
            const TrialSetup setup(t1_profile(ref.scenario_id), t2, settings);
            CellResult& r = results[i];
            r.scenario_id = ref.scenario_id;
            r.benefit_index = ref.benefit_index;
            r.risk_index = ref.risk_index;
            r.trials = settings.trials;
            for (std::size_t t = 0; t < settings.trials; ++t) {
                const auto p = setup.run(trial_seed(settings.seed, ref.scenario_id,
                                                    ref.benefit_index, ref.risk_index, t));
                for (std::size_t m = 0; m < p.size(); ++m) {
                    if (decide(p[m], settings.psi) == Decision::recommend_first)
                        ++r.recommend_t1[m];
                    else if (decide(p[m], settings.psi) == Decision::recommend_second)
                        ++r.recommend_t2[m];
                }
            }
        }
    };
    const unsigned jobs = std::min<std::size_t>(resolve_jobs(settings.jobs), cells.size());
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return results;
}

RecommendationGrid run_grid(const Settings& settings, const std::vector<int>& scenarios) {
    std::vector<CellRef> refs;
    for (int s : scenarios) {
        t1_profile(s);
        for (int b = 0; b < kGridSide; ++b)
            for (int r = 0; r < kGridSide; ++r) refs.push_back({s, b, r});
    }
    return {settings, scenarios, run_cells(refs, settings)};
}

std::vector<PhiCell> difference_grid(const RecommendationGrid& grid) {
    std::vector<PhiCell> out;
    out.reserve(grid.cells.size());
    for (const auto& c : grid.cells) {
        PhiCell phi{c.scenario_id, c.benefit_index, c.risk_index, {}};
        for (std::size_t p = 0; p < kPhiPairs.size(); ++p)
            phi.phi[p] = c.p_rec_t1(model_index(kPhiPairs[p].x)) -
                         c.p_rec_t1(model_index(kPhiPairs[p].y));
        out.push_back(phi);
    }
    return out;
}

SensitivityResult compare_grids(const RecommendationGrid& base, const RecommendationGrid& other) {
    if (base.cells.size() != other.cells.size() || base.scenarios != other.scenarios)
        throw std::invalid_argument("compare_grids: grids cover different cells");
    SensitivityResult out;
    out.rho = other.settings.rho;
    for (int s : base.scenarios) out.rows.push_back({s, {}, {}, kCellsPerScenario});
    for (std::size_t i = 0; i < base.cells.size(); ++i) {
        const auto& a = base.cells[i];
        const auto& b = other.cells[i];
        auto row = std::find_if(out.rows.begin(), out.rows.end(),
                                [&](const SensitivityRow& r) { return r.scenario_id == a.scenario_id; });
        for (std::size_t m = 0; m < 4; ++m) {
            // |k_b/T_b - k_a/T_a| >= x/1000, evaluated in integers.
            const long long lhs =
                std::llabs(static_cast<long long>(b.recommend_t1[m] * a.trials) -
                           static_cast<long long>(a.recommend_t1[m] * b.trials)) * 1000;
            const long long scale = static_cast<long long>(a.trials * b.trials);
            if (lhs >= 25 * scale) ++row->count_2_5[m];
            if (lhs >= 50 * scale) ++row->count_5[m];
        }
    }
    for (const auto& row : out.rows) {
        for (std::size_t m = 0; m < 4; ++m) {
            out.total_2_5[m] += row.count_2_5[m];
            out.total_5[m] += row.count_5[m];
        }
        out.total += row.total;
    }
    return out;
}

SensitivityResult correlation_sensitivity(const Settings& settings, double rho,
                                          const std::vector<int>& scenarios) {
    Settings base = settings;
    base.rho = 0.0;
    Settings correlated = settings;
    correlated.rho = rho;
    return compare_grids(run_grid(base, scenarios), run_grid(correlated, scenarios));
}

}  // namespace brmcda::sim
