#include "qbaker/chaos.hpp"

#include <cmath>
#include <stdexcept>

namespace qbaker::chaos {

namespace {

const Dyadic kOne(1, 0);

double log_in_base(double x, LogBase base) {
    return base == LogBase::Two ? std::log2(x) : std::log(x);
}

void check_window(const OrbitSeries& orbit, std::size_t start, std::size_t window,
                  std::size_t need_past_end) {
    if (window == 0) {
        throw std::invalid_argument("empirical window must be nonempty");
    }
    // need orbit indices up to start + window - 1 + need_past_end
    const std::size_t last = start + window - 1 + need_past_end;
    if (last >= orbit.length() || start >= orbit.length()) {
        throw std::out_of_range("window exceeds orbit");
    }
}

std::vector<int> window_bins(const OrbitSeries& orbit, std::size_t start,
                             std::size_t count, int bins) {
    std::vector<int> idx(count);
    for (std::size_t k = 0; k < count; ++k) {
        idx[k] = bin_index(orbit.at(start + k), bins);
    }
    return idx;
}

}  // namespace

int bin_index(const Dyadic& x, int bins) {
    if (bins < 1) {
        throw std::invalid_argument("bin_index: need at least one cell");
    }
    if (x > kOne) {
        throw std::domain_error("bin_index: value outside [0,1]");
    }
    const BigInt scaled = x.floor_scaled(static_cast<std::uint64_t>(bins));
    auto idx = scaled.convert_to<int>();
    if (idx >= bins) {
        idx = bins - 1;  // x == 1 joins the closed last cell
    }
    return idx;
}

BinnedDistribution empirical_marginal(const OrbitSeries& orbit, std::size_t start,
                                      std::size_t window, const Partition& part) {
    check_window(orbit, start, window, 0);
    BinnedDistribution dist;
    dist.window_start = start;
    dist.window_len = window;
    dist.bins = part.bins;
    dist.counts.assign(static_cast<std::size_t>(part.bins), 0);
    for (std::size_t k = 0; k < window; ++k) {
        ++dist.counts[static_cast<std::size_t>(bin_index(orbit.at(start + k), part.bins))];
    }
    return dist;
}

JointDistribution empirical_joint(const OrbitSeries& orbit, std::size_t start,
                                  std::size_t window, const Partition& part) {
    check_window(orbit, start, window, 1);
    JointDistribution joint;
    joint.window_start = start;
    joint.window_len = window;
    joint.bins = part.bins;
    const auto k_bins = static_cast<std::size_t>(part.bins);
    joint.counts.assign(k_bins * k_bins, 0);
    int prev = bin_index(orbit.at(start), part.bins);
    for (std::size_t k = 0; k < window; ++k) {
        const int next = bin_index(orbit.at(start + k + 1), part.bins);
        ++joint.counts[static_cast<std::size_t>(prev) * k_bins + static_cast<std::size_t>(next)];
        prev = next;
    }
    return joint;
}

namespace {

void check_consistent(const JointDistribution& joint, const BinnedDistribution& marginal) {
    if (joint.bins != marginal.bins || joint.window_start != marginal.window_start ||
        joint.window_len != marginal.window_len) {
        throw std::invalid_argument("joint/marginal pair from different windows");
    }
    for (int i = 0; i < joint.bins; ++i) {
        std::uint64_t row = 0;
        for (int j = 0; j < joint.bins; ++j) {
            row += joint.pair(i, j);
        }
        if (row != marginal.counts[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("joint row sums do not reproduce the marginal");
        }
    }
}

}  // namespace

ChannelMatrix channel(const JointDistribution& joint, const BinnedDistribution& marginal) {
    check_consistent(joint, marginal);
    ChannelMatrix ch;
    ch.bins = joint.bins;
    const auto k_bins = static_cast<std::size_t>(joint.bins);
    ch.entries.assign(k_bins * k_bins, 0.0);
    ch.defined.assign(k_bins, 0);
    for (std::size_t i = 0; i < k_bins; ++i) {
        const std::uint64_t ci = marginal.counts[i];
        if (ci == 0) {
            continue;
        }
        ch.defined[i] = 1;
        for (std::size_t j = 0; j < k_bins; ++j) {
            ch.entries[i * k_bins + j] =
                static_cast<double>(joint.counts[i * k_bins + j]) / static_cast<double>(ci);
        }
    }
    return ch;
}

double chaos_degree(const JointDistribution& joint, const BinnedDistribution& marginal,
                    LogBase base) {
    check_consistent(joint, marginal);
    // D = (1/W) sum_{ij} c_ij log(c_i / c_ij); probabilities stay exact
    // ratios until this final float evaluation.
    const auto k_bins = static_cast<std::size_t>(joint.bins);
    const double w = static_cast<double>(joint.window_len);
    double d = 0.0;
    for (std::size_t i = 0; i < k_bins; ++i) {
        const std::uint64_t ci = marginal.counts[i];
        if (ci == 0) continue;
        for (std::size_t j = 0; j < k_bins; ++j) {
            const std::uint64_t cij = joint.counts[i * k_bins + j];
            if (cij == 0) continue;
            d += static_cast<double>(cij) / w *
                 log_in_base(static_cast<double>(ci) / static_cast<double>(cij), base);
        }
    }
    return d;
}

double chaos_degree_channel_form(const JointDistribution& joint,
                                 const BinnedDistribution& marginal, LogBase base) {
    const ChannelMatrix ch = channel(joint, marginal);
    const auto k_bins = static_cast<std::size_t>(joint.bins);
    const double w = static_cast<double>(joint.window_len);
    double d = 0.0;
    for (std::size_t i = 0; i < k_bins; ++i) {
        if (!ch.defined[i]) continue;
        double entropy = 0.0;
        for (std::size_t j = 0; j < k_bins; ++j) {
            const double pij = ch.entries[i * k_bins + j];
            if (pij > 0.0) {
                entropy -= pij * log_in_base(pij, base);
            }
        }
        d += static_cast<double>(marginal.counts[i]) / w * entropy;
    }
    return d;
}

std::vector<std::pair<std::size_t, double>> chaos_degree_series(
    const OrbitSeries& orbit, std::size_t window, const Partition& part, LogBase base) {
    if (orbit.length() < window + 1) {
        throw std::out_of_range("orbit too short for one window");
    }
    // Bin every orbit point once, then slide.
    const std::vector<int> bins = window_bins(orbit, 0, orbit.length(), part.bins);
    const std::size_t n_windows = orbit.length() - window;
    std::vector<std::pair<std::size_t, double>> out(n_windows);
    const auto k_bins = static_cast<std::size_t>(part.bins);
    const auto nw = static_cast<std::int64_t>(n_windows);
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < nw; ++s) {
        const auto start = static_cast<std::size_t>(s);
        std::vector<std::uint64_t> cj(k_bins * k_bins, 0);
        std::vector<std::uint64_t> ci(k_bins, 0);
        for (std::size_t k = 0; k < window; ++k) {
            const auto a = static_cast<std::size_t>(bins[start + k]);
            const auto b = static_cast<std::size_t>(bins[start + k + 1]);
            ++cj[a * k_bins + b];
            ++ci[a];
        }
        const double w = static_cast<double>(window);
        double d = 0.0;
        for (std::size_t i = 0; i < k_bins; ++i) {
            if (ci[i] == 0) continue;
            for (std::size_t j = 0; j < k_bins; ++j) {
                if (cj[i * k_bins + j] == 0) continue;
                d += static_cast<double>(cj[i * k_bins + j]) / w *
                     log_in_base(static_cast<double>(ci[i]) / static_cast<double>(cj[i * k_bins + j]),
                                 base);
            }
        }
        out[start] = {start, d};
    }
    return out;
}

PartitionSweep sup_over_partitions(const OrbitSeries& orbit, std::size_t start,
                                   std::size_t window, std::span<const int> bin_counts,
                                   LogBase base) {
    if (bin_counts.empty()) {
        throw std::invalid_argument("sup_over_partitions: empty partition family");
    }
    PartitionSweep sweep;
    bool first = true;
    for (int k : bin_counts) {
        const Partition part{k};
        const auto marginal = empirical_marginal(orbit, start, window, part);
        const auto joint = empirical_joint(orbit, start, window, part);
        const double d = chaos_degree(joint, marginal, base);
        sweep.per_partition.emplace_back(k, d);
        if (first || d > sweep.best_value) {
            sweep.best_bins = k;
            sweep.best_value = d;
            first = false;
        }
    }
    return sweep;
}

}  // namespace qbaker::chaos
