#pragma once

#include "rsinfer/core/set_realization.hpp"

#include <iosfwd>
#include <vector>

namespace rsinfer {

// Equally weighted draws of a random set. Empty members are rejected here;
// the posterior sampler filters them before bundling.
struct SampleBundle {
    std::vector<SetRealization> realizations;

    explicit SampleBundle(std::vector<SetRealization> r);
    std::size_t size() const { return realizations.size(); }
};

// Empirical RSD / capacity: fraction of realizations contained in / hitting
// the query.
double estimate_rsd(const SampleBundle& b, const IntervalBox& q);
double estimate_capacity(const SampleBundle& b, const IntervalBox& q);
// General query sets (used for union queries in the additivity checks).
double estimate_rsd(const SampleBundle& b, const SetRealization& q);
double estimate_capacity(const SampleBundle& b, const SetRealization& q);

// CSV round trip: header then one line per realization
// (kind,dim,count,values...). Doubles print with enough digits to round-trip
// exactly.
void write_bundle_csv(const SampleBundle& b, std::ostream& os);
SampleBundle read_bundle_csv(std::istream& is);

}  // namespace rsinfer
