#include "qbaker/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbaker::classical {

namespace {

const Dyadic kHalf(1, 1);
const Dyadic kOne(1, 0);

void check_unit_square(const ClassicalPoint& pt) {
    if (pt.q > kOne || pt.p > kOne) {
        throw std::domain_error("baker_step: point outside the unit square");
    }
}

}  // namespace

ClassicalPoint baker_step(const ClassicalPoint& pt) {
    check_unit_square(pt);
    if (pt.q <= kHalf) {
        return {pt.q.twice(), pt.p.half()};
    }
    return {pt.q.twice() - kOne, (pt.p + kOne).half()};
}

ClassicalPoint baker_step_inverse(const ClassicalPoint& pt) {
    check_unit_square(pt);
    if (pt.p < kHalf) {
        return {pt.q.half(), pt.p.twice()};
    }
    return {(pt.q + kOne).half(), pt.p.twice() - kOne};
}

SymbolicString::SymbolicString(std::vector<std::uint8_t> past,
                               std::vector<std::uint8_t> future)
    : past_(std::move(past)), future_(std::move(future)) {
    for (auto b : past_) {
        if (b > 1) throw std::invalid_argument("SymbolicString: element not 0/1");
    }
    for (auto b : future_) {
        if (b > 1) throw std::invalid_argument("SymbolicString: element not 0/1");
    }
}

SymbolicString SymbolicString::shift() const {
    if (future_.empty()) {
        throw std::domain_error("SymbolicString::shift: future expansion exhausted");
    }
    std::vector<std::uint8_t> past;
    past.reserve(past_.size() + 1);
    past.push_back(future_.front());
    past.insert(past.end(), past_.begin(), past_.end());
    std::vector<std::uint8_t> future(future_.begin() + 1, future_.end());
    return SymbolicString(std::move(past), std::move(future));
}

ClassicalPoint SymbolicString::decode() const {
    BigInt qn = 0;
    for (auto b : future_) {
        qn <<= 1;
        qn += b;
    }
    BigInt pn = 0;
    for (auto b : past_) {
        pn <<= 1;
        pn += b;
    }
    return {Dyadic(qn, static_cast<std::uint32_t>(future_.size())),
            Dyadic(pn, static_cast<std::uint32_t>(past_.size()))};
}

OrbitSeries classical_q_orbit(const BitString& xi, std::size_t n_max,
                              const ClassicalOrbitMode& mode,
                              std::size_t precision_bits) {
    // Digit stream s_1 s_2 ...: the initial block, the marker 1, then the
    // mode-dependent tail (zeros are implicit for the truncated mode).
    std::vector<std::uint8_t> stream(xi.bits());
    stream.push_back(1);
    if (mode.kind == OrbitKind::Extended) {
        RandomBitSource tail(mode.seed);
        const std::size_t total = n_max + precision_bits;
        while (stream.size() < total) {
            stream.push_back(static_cast<std::uint8_t>(tail.next_bit()));
        }
    }

    OrbitSeries series;
    series.provenance = mode.kind == OrbitKind::Truncated
                            ? Provenance::ClassicalTruncated
                            : Provenance::ClassicalExtended;
    series.values.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::size_t first = n;                      // s_{n+1} is stream[n]
        std::size_t last = stream.size();
        if (mode.kind == OrbitKind::Extended && last > first + precision_bits) {
            last = first + precision_bits;
        }
        BigInt num = 0;
        std::uint32_t len = first < last ? static_cast<std::uint32_t>(last - first) : 0;
        for (std::size_t i = first; i < last;) {
            const std::size_t chunk = std::min<std::size_t>(64, last - i);
            std::uint64_t word = 0;
            for (std::size_t j = 0; j < chunk; ++j, ++i) {
                word = (word << 1) | stream[i];
            }
            num <<= chunk;
            num += word;
        }
        series.values.emplace_back(std::move(num), len);
    }
    return series;
}

}  // namespace qbaker::classical
