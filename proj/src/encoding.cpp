// Copyright 2026 The qclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qclass/encoding.hpp"

#include "qclass/error.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace qclass {

std::vector<std::int64_t> metric_coefficients(const FeatureVector &v,
                                              Metric metric) {
    if (metric == Metric::AIP) {
        return {v.components().begin(), v.components().end()};
    }
    return v.signed_components();
}

namespace {

EncodedState normalize(const std::vector<std::int64_t> &coeffs,
                       std::string_view what) {
    if (coeffs.empty() || !std::has_single_bit(coeffs.size())) {
        throw InvalidArgument(std::string(what) + ": region count " +
                              std::to_string(coeffs.size()) +
                              " is not a power of two (pad explicitly)");
    }
    double sq = 0.0;
    for (auto c : coeffs) {
        sq += static_cast<double>(c) * static_cast<double>(c);
    }
    if (sq == 0.0) {
        throw InvalidArgument(std::string(what) +
                              ": all-zero vector cannot be normalized");
    }
    const double eta = std::sqrt(sq);
    std::vector<Complex> amps(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        amps[i] = Complex{static_cast<double>(coeffs[i]) / eta};
    }
    return {StateVector::from_amplitudes(std::move(amps)), eta};
}

} // namespace

EncodedState encode_aip(const FeatureVector &v) {
    return normalize(metric_coefficients(v, Metric::AIP), "AIP encoding");
}

EncodedState encode_sip(const FeatureVector &v) {
    return normalize(metric_coefficients(v, Metric::SIP), "SIP encoding");
}

EncodedState encode(const FeatureVector &v, Metric metric) {
    return metric == Metric::AIP ? encode_aip(v) : encode_sip(v);
}

double ry_angle(QubitPair pair) { return 2.0 * std::atan2(pair.b, pair.a); }

StateVector product_state(std::span<const QubitPair> pairs) {
    const std::size_t n = pairs.size();
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        double v = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            v *= (x & qubit_mask(q, n)) ? pairs[q].b : pairs[q].a;
        }
        amps[x] = Complex{v};
    }
    return StateVector::from_amplitudes(std::move(amps), 1e-8);
}

namespace {

struct AscentResult {
    std::vector<QubitPair> pairs;
    double overlap;
    bool converged;
    std::size_t sweeps;
};

// Coefficients <target|...> restricted to qubit q = 0 and q = 1 with all
// other qubits contracted against their current pairs.
std::pair<Complex, Complex> partial_overlaps(std::span<const Complex> target,
                                             std::span<const QubitPair> pairs,
                                             std::size_t q) {
    const std::size_t n = pairs.size();
    Complex alpha{0};
    Complex beta{0};
    for (std::size_t x = 0; x < target.size(); ++x) {
        double w = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != q) {
                w *= (x & qubit_mask(j, n)) ? pairs[j].b : pairs[j].a;
            }
        }
        const Complex term = std::conj(target[x]) * w;
        if (x & qubit_mask(q, n)) {
            beta += term;
        } else {
            alpha += term;
        }
    }
    return {alpha, beta};
}

AscentResult ascend(std::span<const Complex> target, std::vector<QubitPair> pairs,
                    const FitOptions &opt) {
    double prev = -1.0;
    double overlap = 0.0;
    std::size_t sweep = 0;
    while (sweep < opt.max_iter) {
        ++sweep;
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            const auto [alpha, beta] = partial_overlaps(target, pairs, q);
            // |a alpha + b beta|^2 = (a b) G (a b)^T.
            const double p = std::norm(alpha);
            const double r = std::real(alpha * std::conj(beta));
            const double s = std::norm(beta);
            const double mean = 0.5 * (p + s);
            const double lambda =
                mean + std::sqrt(0.25 * (p - s) * (p - s) + r * r);
            double a = lambda - s;
            double b = r;
            if (std::hypot(a, b) < 1e-300) {
                a = p >= s ? 1.0 : 0.0;
                b = p >= s ? 0.0 : 1.0;
            }
            const double len = std::hypot(a, b);
            pairs[q] = {a / len, b / len};
            overlap = std::sqrt(std::max(lambda, 0.0));
        }
        if (1.0 - overlap <= opt.tol || overlap - prev <= 1e-15) {
            return {std::move(pairs), overlap, true, sweep};
        }
        prev = overlap;
    }
    return {std::move(pairs), overlap, false, sweep};
}

} // namespace

ProductFit fit_product_state(const StateVector &target,
                             const FitOptions &options) {
    if (std::abs(target.norm() - 1.0) > 1e-9) {
        throw InvalidArgument("fit_product_state: target is not normalized");
    }
    const std::size_t n = target.num_qubits();
    const auto amps = target.amplitudes();
    if (n == 0) {
        return {{}, 1.0 - std::abs(amps[0]), true, 0};
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);

    AscentResult best{{}, -1.0, false, 0};
    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<QubitPair> start(n);
        for (auto &p : start) {
            const double th = angle(rng);
            p = {std::cos(th / 2), std::sin(th / 2)};
        }
        auto res = ascend(amps, std::move(start), options);
        if (res.overlap > best.overlap) {
            best = std::move(res);
        }
        if (1.0 - best.overlap <= options.tol) {
            break;
        }
    }

    // Non-negative real overlap with the target.
    const Complex ov = target.inner(product_state(best.pairs));
    if (ov.real() < 0) {
        best.pairs[0].a = -best.pairs[0].a;
        best.pairs[0].b = -best.pairs[0].b;
    }
    return {std::move(best.pairs), 1.0 - std::abs(ov), best.converged,
            best.sweeps};
}

std::vector<Gate> binomial_pattern_gates(std::span<const QubitPair> pattern,
                                         std::span<const std::size_t> qubits) {
    if (!qubits.empty() && qubits.size() != pattern.size()) {
        throw InvalidArgument("binomial_pattern_gates: " +
                              std::to_string(pattern.size()) + " pairs for " +
                              std::to_string(qubits.size()) + " qubits");
    }
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const double len = std::hypot(pattern[i].a, pattern[i].b);
        if (len == 0.0) {
            throw InvalidArgument("binomial_pattern_gates: zero pair for qubit " +
                                  std::to_string(i));
        }
        const double theta = ry_angle({pattern[i].a / len, pattern[i].b / len});
        if (theta == 0.0) {
            continue;
        }
        gates.push_back(Gate::ry(qubits.empty() ? i : qubits[i], theta));
    }
    return gates;
}

ExclusionResult zero_coefficient_exclusion(const FeatureVector &test,
                                           std::span<const FeatureVector> classes) {
    if (test.is_zero()) {
        throw InvalidArgument("zero_coefficient_exclusion: test vector is all "
                              "zero, nothing to keep");
    }
    std::vector<std::size_t> keep;
    for (std::size_t f = 0; f < test.size(); ++f) {
        if (test[f] != 0) {
            keep.push_back(f);
        }
    }
    ExclusionResult out{test.select(keep), {}, keep};
    out.classes.reserve(classes.size());
    for (const auto &c : classes) {
        if (c.size() != test.size()) {
            throw InvalidArgument("zero_coefficient_exclusion: class length " +
                                  std::to_string(c.size()) + " != test length " +
                                  std::to_string(test.size()));
        }
        out.classes.push_back(c.select(keep));
    }
    return out;
}

} // namespace qclass
