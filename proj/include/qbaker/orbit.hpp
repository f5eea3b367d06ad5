#pragma once

#include <string_view>
#include <vector>

#include "qbaker/dyadic.hpp"

namespace qbaker {

enum class Provenance {
    QuantumClosedForm,
    ClassicalTruncated,
    ClassicalExtended,
    Oracle,
};

std::string_view to_string(Provenance p);

/// Time-indexed exact scalar orbit, values[n] for n = 0..n_max.
struct OrbitSeries {
    Provenance provenance;
    std::vector<Dyadic> values;

    std::size_t length() const { return values.size(); }
    const Dyadic& at(std::size_t n) const { return values.at(n); }
};

}  // namespace qbaker
