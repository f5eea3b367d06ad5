#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qbaker/dyadic.hpp"
#include "qbaker/orbit.hpp"

namespace qbaker::chaos {

enum class LogBase { Two, E };

/// Uniform partition of [0,1] into `bins` cells [k/K, (k+1)/K), last cell
/// closed at 1.
struct Partition {
    int bins;
};

/// Cell index of an exact value: floor(K x) clamped to K-1, decided by exact
/// integer arithmetic so boundary points never land in the wrong cell.
/// Throws std::domain_error for x outside [0,1].
int bin_index(const Dyadic& x, int bins);

/// Empirical cell occupation over the window [start, start+len-1].
/// Probabilities are the exact rationals counts[i]/len.
struct BinnedDistribution {
    std::size_t window_start = 0;
    std::size_t window_len = 0;
    int bins = 0;
    std::vector<std::uint64_t> counts;
};

/// Empirical one-step pair occupation; counts[i*K+j] is the number of k in
/// the window with orbit(k) in cell i and orbit(k+1) in cell j.
struct JointDistribution {
    std::size_t window_start = 0;
    std::size_t window_len = 0;
    int bins = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t pair(int i, int j) const {
        return counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(bins) + static_cast<std::size_t>(j)];
    }
};

/// Column-stochastic one-step transition matrix p_ij / p_i. Rows with
/// marginal zero are undefined and flagged.
struct ChannelMatrix {
    int bins = 0;
    std::vector<double> entries;       // row-major, entries[i*K+j]
    std::vector<std::uint8_t> defined;  // per source cell i
};

BinnedDistribution empirical_marginal(const OrbitSeries& orbit, std::size_t start,
                                      std::size_t window, const Partition& part);

JointDistribution empirical_joint(const OrbitSeries& orbit, std::size_t start,
                                  std::size_t window, const Partition& part);

/// Requires a marginal/joint pair built over the same window; throws
/// std::invalid_argument otherwise.
ChannelMatrix channel(const JointDistribution& joint, const BinnedDistribution& marginal);

/// Entropic chaos degree D = sum_{ij} p_ij log(p_i / p_ij), the 0 log 0 terms
/// dropped. 0 <= D <= log(bins); 0 exactly when the observed cell transition
/// is deterministic.
double chaos_degree(const JointDistribution& joint, const BinnedDistribution& marginal,
                    LogBase base);

/// Same quantity through the channel: sum_i p_i S(column i). Kept as the
/// second algebraic route for verification.
double chaos_degree_channel_form(const JointDistribution& joint,
                                 const BinnedDistribution& marginal, LogBase base);

/// Sliding-window chaos degree at every start n with n + window < length.
std::vector<std::pair<std::size_t, double>> chaos_degree_series(
    const OrbitSeries& orbit, std::size_t window, const Partition& part, LogBase base);

struct PartitionSweep {
    int best_bins = 0;
    double best_value = 0.0;
    std::vector<std::pair<int, double>> per_partition;
};

/// Finite sup over a family of uniform partitions: D per resolution, max
/// reported with its argmax.
PartitionSweep sup_over_partitions(const OrbitSeries& orbit, std::size_t start,
                                   std::size_t window, std::span<const int> bin_counts,
                                   LogBase base);

}  // namespace qbaker::chaos
