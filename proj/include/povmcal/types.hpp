// Copyright 2026 The povmcal developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Value types shared across the toolkit: photon-number distributions,
 * diagonal POVM matrices, efficiency schedules and the two-SPAD
 * detector-tree description.  All types validate their invariants at
 * construction and are immutable afterwards.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace povmcal {

inline constexpr const char* kVersion = "0.1.0";

/// Normalization tolerance shared by the probability-vector invariants.
inline constexpr double kNormTol = 1e-9;

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

}  // namespace detail

/**
 * A probability distribution over photon number m = 0..M.  Entries are
 * nonnegative and sum to one; any truncation deficit of the raw input is
 * folded into the normalization at construction.
 */
class PhotonDistribution {
  public:
    static PhotonDistribution from_probs(std::vector<double> probs) {
        detail::require(!probs.empty(), "PhotonDistribution: empty probability vector");
        double sum = 0.0;
        for (std::size_t m = 0; m < probs.size(); ++m) {
            detail::require(std::isfinite(probs[m]),
                            "PhotonDistribution: non-finite entry at m=" + std::to_string(m));
            detail::require(probs[m] >= -1e-12,
                            "PhotonDistribution: negative entry at m=" + std::to_string(m));
            if (probs[m] < 0.0) probs[m] = 0.0;
            sum += probs[m];
        }
        detail::require(sum > 0.0, "PhotonDistribution: all entries zero");
        for (double& p : probs) p /= sum;
        return PhotonDistribution(std::move(probs));
    }

    const std::vector<double>& probs() const { return probs_; }
    double operator[](std::size_t m) const { return probs_[m]; }
    std::size_t size() const { return probs_.size(); }
    int truncation() const { return static_cast<int>(probs_.size()) - 1; }

  private:
    explicit PhotonDistribution(std::vector<double> probs) : probs_(std::move(probs)) {}
    std::vector<double> probs_;
};

/// Poisson photon-number source with mean photons per pulse mu > 0.
class PoissonSource {
  public:
    explicit PoissonSource(double mu) : mu_(mu) {
        detail::require(std::isfinite(mu) && mu > 0.0, "PoissonSource: mu must be positive");
    }

    double mu() const { return mu_; }

    /// Truncated pmf over m = 0..truncation, renormalized to sum 1.
    PhotonDistribution expand(int truncation) const {
        detail::require(truncation >= 0, "PoissonSource::expand: negative truncation");
        std::vector<double> pmf(static_cast<std::size_t>(truncation) + 1);
        for (int m = 0; m <= truncation; ++m) {
            pmf[static_cast<std::size_t>(m)] =
                std::exp(-mu_ + m * std::log(mu_) - std::lgamma(m + 1.0));
        }
        return PhotonDistribution::from_probs(std::move(pmf));
    }

  private:
    double mu_;
};

/**
 * Diagonal POVM of an N-outcome photon counter, stored as the N x (M+1)
 * matrix of conditional outcome probabilities.  Row n is the outcome,
 * column m the incident photon number; every column sums to one.
 */
class PovmMatrix {
  public:
    static PovmMatrix from_elements(std::vector<std::vector<double>> rows) {
        detail::require(!rows.empty() && !rows[0].empty(), "PovmMatrix: empty element matrix");
        const std::size_t n_outcomes = rows.size();
        const std::size_t n_cols = rows[0].size();
        for (const auto& row : rows) {
            detail::require(row.size() == n_cols, "PovmMatrix: ragged rows");
        }
        for (std::size_t m = 0; m < n_cols; ++m) {
            double col_sum = 0.0;
            for (std::size_t n = 0; n < n_outcomes; ++n) {
                const double v = rows[n][m];
                detail::require(std::isfinite(v) && v >= -kNormTol && v <= 1.0 + kNormTol,
                                "PovmMatrix: element (" + std::to_string(n) + "," +
                                    std::to_string(m) + ") outside [0,1]");
                col_sum += v;
            }
            detail::require(std::abs(col_sum - 1.0) <= kNormTol,
                            "PovmMatrix: column " + std::to_string(m) +
                                " sums to " + std::to_string(col_sum));
        }
        std::vector<double> flat;
        flat.reserve(n_outcomes * n_cols);
        for (const auto& row : rows) {
            for (double v : row) flat.push_back(std::min(1.0, std::max(0.0, v)));
        }
        return PovmMatrix(std::move(flat), n_outcomes, n_cols);
    }

    /// Ideal photon-number resolver: (M+1) outcomes, identity response.
    static PovmMatrix identity(int truncation) {
        detail::require(truncation >= 0, "PovmMatrix::identity: negative truncation");
        const std::size_t d = static_cast<std::size_t>(truncation) + 1;
        std::vector<std::vector<double>> rows(d, std::vector<double>(d, 0.0));
        for (std::size_t i = 0; i < d; ++i) rows[i][i] = 1.0;
        return from_elements(std::move(rows));
    }

    double element(std::size_t n, std::size_t m) const { return flat_[n * n_cols_ + m]; }
    std::size_t n_outcomes() const { return n_outcomes_; }
    int truncation() const { return static_cast<int>(n_cols_) - 1; }

    std::vector<double> column(std::size_t m) const {
        std::vector<double> col(n_outcomes_);
        for (std::size_t n = 0; n < n_outcomes_; ++n) col[n] = element(n, m);
        return col;
    }

  private:
    PovmMatrix(std::vector<double> flat, std::size_t n_outcomes, std::size_t n_cols)
        : flat_(std::move(flat)), n_outcomes_(n_outcomes), n_cols_(n_cols) {}

    std::vector<double> flat_;
    std::size_t n_outcomes_;
    std::size_t n_cols_;
};

/**
 * Calibrated tomographer efficiencies, strictly increasing in (0, 1],
 * each optionally carrying a standard uncertainty.
 */
class EfficiencySchedule {
  public:
    static EfficiencySchedule from_etas(std::vector<double> etas,
                                        std::vector<double> sigmas = {}) {
        detail::require(!etas.empty(), "EfficiencySchedule: empty");
        detail::require(sigmas.empty() || sigmas.size() == etas.size(),
                        "EfficiencySchedule: sigma/eta size mismatch");
        for (std::size_t i = 0; i < etas.size(); ++i) {
            detail::require(std::isfinite(etas[i]) && etas[i] > 0.0 && etas[i] <= 1.0,
                            "EfficiencySchedule: eta[" + std::to_string(i) +
                                "] outside (0,1]");
            if (i > 0) {
                detail::require(etas[i] > etas[i - 1],
                                "EfficiencySchedule: etas not strictly increasing at index " +
                                    std::to_string(i));
            }
        }
        return EfficiencySchedule(std::move(etas), std::move(sigmas));
    }

    static EfficiencySchedule linspace(double lo, double hi, std::size_t count) {
        detail::require(count >= 1, "EfficiencySchedule::linspace: count must be >= 1");
        std::vector<double> etas(count);
        if (count == 1) {
            etas[0] = lo;
        } else {
            for (std::size_t i = 0; i < count; ++i) {
                etas[i] = lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(count - 1);
            }
        }
        return from_etas(std::move(etas));
    }

    const std::vector<double>& etas() const { return etas_; }
    double eta(std::size_t i) const { return etas_[i]; }
    std::size_t size() const { return etas_.size(); }

    std::optional<double> sigma(std::size_t i) const {
        if (sigmas_.empty()) return std::nullopt;
        return sigmas_[i];
    }

  private:
    EfficiencySchedule(std::vector<double> etas, std::vector<double> sigmas)
        : etas_(std::move(etas)), sigmas_(std::move(sigmas)) {}

    std::vector<double> etas_;
    std::vector<double> sigmas_;
};

/// Two-SPAD detector tree behind a 50:50 splitter, with total efficiency
/// eta_dut (optical losses included).
struct DetectorTreeSpec {
    double eta_dut = 0.5;
    int n_spads = 2;

    DetectorTreeSpec(double eta_dut_, int n_spads_ = 2)
        : eta_dut(eta_dut_), n_spads(n_spads_) {
        detail::require(std::isfinite(eta_dut) && eta_dut >= 0.0 && eta_dut <= 1.0,
                        "DetectorTreeSpec: eta_dut outside [0,1]");
        detail::require(n_spads >= 1, "DetectorTreeSpec: n_spads must be >= 1");
    }

    /// Outcome alphabet size: 0, 1, .., n_spads clicks.
    std::size_t n_outcomes() const { return static_cast<std::size_t>(n_spads) + 1; }
};

}  // namespace povmcal
