#include "rsinfer/models/mass_function.hpp"

#include <cmath>

namespace rsinfer {

MassFunction::MassFunction(std::vector<SetRealization> focal_in, Vec mass_in)
    : focal(std::move(focal_in)), mass(std::move(mass_in)) {
    if (focal.empty() || focal.size() != mass.size())
        throw ConfigError("mass function needs matching nonempty focal/mass lists");
    double sum = 0.0;
    for (std::size_t i = 0; i < focal.size(); ++i) {
        if (focal[i].is_empty())
            throw ConfigError("mass function focal set must be nonempty");
        if (!(mass[i] > 0.0) || mass[i] > 1.0 + kMassSumTol)
            throw ConfigError("mass function masses must lie in (0,1]");
        if (focal[i].dim() != focal[0].dim())
            throw ConfigError("mass function focal sets must share one dimension");
        sum += mass[i];
    }
    if (std::abs(sum - 1.0) > kMassSumTol)
        throw ConfigError("mass function masses must sum to one");
    for (auto& w : mass) w /= sum;
}

const SetRealization& mass_to_random_set(const MassFunction& m, double u) {
    if (u < 0.0 || u > 1.0) throw ConfigError("mass_to_random_set needs u in [0,1]");
    if (u <= 0.0) return m.focal[0];
    double cum = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        cum += m.mass[i];
        if (u <= cum) return m.focal[i];
    }
    return m.focal.back(); // u = 1 with rounding in the cumulative sum
}

std::pair<double, double> bel_pl(const MassFunction& m, const SetRealization& query) {
    if (query.is_empty()) throw ConfigError("bel_pl query must be nonempty");
    double bel = 0.0, pl = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (subset_of_set(m.focal[i], query)) bel += m.mass[i];
        if (hits_set(m.focal[i], query)) pl += m.mass[i];
    }
    return {bel, pl};
}

}  // namespace rsinfer
