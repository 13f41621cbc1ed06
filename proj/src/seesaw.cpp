// Copyright 2026 The trinl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "trinl/seesaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "trinl/catalog.hpp"
#include "trinl/errors.hpp"
#include "trinl/parallel.hpp"

namespace trinl {

namespace {

using Vec4 = std::array<double, 4>;
using Slots = std::array<Vec4, 3>;

Slots slots_for(std::size_t term, const Settings& s) {
    const Triple tr = term_of(term);
    Slots u{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (tr[k] < 0) {
            u[k] = {1, 0, 0, 0};
        } else {
            const auto& n = s[2 * k + static_cast<std::size_t>(tr[k])].bloch();
            u[k] = {0, n.x(), n.y(), n.z()};
        }
    }
    return u;
}

// Contraction of the tensor with every slot except `free`.
Vec4 partial(const CorrelationTensor& t, std::size_t free, const Slots& u) {
    Vec4 g{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                const double w = t[16 * i + 4 * j + k];
                if (w == 0.0) continue;
                const std::array<std::size_t, 3> idx{i, j, k};
                double prod = w;
                for (std::size_t p = 0; p < 3; ++p) {
                    if (p != free) prod *= u[p][idx[p]];
                }
                g[idx[free]] += prod;
            }
        }
    }
    return g;
}

Matrix8c bell_operator(const RealCoefficients& c, const Settings& s) {
    Matrix8c w = Matrix8c::Zero();
    for (std::size_t term = 0; term < kCorrelatorTerms; ++term) {
        if (c[term] == 0.0) continue;
        const Triple tr = term_of(term);
        std::array<Matrix2c, 3> m;
        for (std::size_t k = 0; k < 3; ++k) {
            m[k] = tr[k] < 0 ? pauli(0) : s[2 * k + static_cast<std::size_t>(tr[k])].matrix();
        }
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                w(i, j) += c[term] * m[0](i >> 2, j >> 2) * m[1]((i >> 1) & 1, (j >> 1) & 1) * m[2](i & 1, j & 1);
            }
        }
    }
    return w;
}

bool decreased(double before, double after) { return after < before - 1e-12 * (1.0 + std::abs(before)); }

}  // namespace

RealCoefficients real_correlators(const BellExpression& expr) {
    RealCoefficients c{};
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) c[t] = expr.correlators()[t].get_d();
    return c;
}

RealCoefficients correlators_of_functional(const std::array<double, kEntries>& f) {
    RealCoefficients c{};
    for (std::size_t e = 0; e < kEntries; ++e) {
        if (f[e] == 0.0) continue;
        const Triple in = inputs_of(e), out = outcomes_of(e);
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
            const Triple tr = term_of(t);
            if ((tr[0] >= 0 && tr[0] != in[0]) || (tr[1] >= 0 && tr[1] != in[1]) || (tr[2] >= 0 && tr[2] != in[2])) continue;
            c[t] += term_sign(t, out) * f[e] / 8.0;
        }
    }
    return c;
}

double quantum_value(const RealCoefficients& c, const CorrelationTensor& t, const Settings& observables) {
    const CorrelatorForm<double> q = quantum_correlators(t, observables);
    double v = 0.0;
    for (std::size_t term = 0; term < kCorrelatorTerms; ++term) v += c[term] * q[term];
    return v;
}

Settings random_settings(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Settings s;
    for (auto& o : s) {
        Eigen::Vector3d v;
        do {
            v = {normal(rng), normal(rng), normal(rng)};
        } while (v.norm() < 1e-6);
        o = Observable::from_vector(v);
    }
    return s;
}

std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

SeesawResult seesaw_run(const RealCoefficients& c, const QuantumState& state, const Settings& start,
                        const SeesawOptions& options) {
    SeesawResult r;
    r.observables = start;
    r.state = state;
    CorrelationTensor t = correlation_tensor(state);
    double value = quantum_value(c, t, r.observables);
    for (r.sweeps = 1; r.sweeps <= options.max_sweeps; ++r.sweeps) {
        const double before = value;
        if (options.optimize_state) {
            Eigen::SelfAdjointEigenSolver<Matrix8c> eig(bell_operator(c, r.observables));
            Vector8c psi = eig.eigenvectors().col(7);
            psi /= psi.norm();
            r.state = QuantumState::from_pure(psi, "seesaw");
            t = correlation_tensor(r.state);
            const double next = quantum_value(c, t, r.observables);
            if (decreased(value, next)) r.monotone = false;
            value = next;
        }
        for (std::size_t slot = 0; slot < 6; ++slot) {
            const std::size_t party = slot / 2;
            const int setting = static_cast<int>(slot % 2);
            Eigen::Vector3d g = Eigen::Vector3d::Zero();
            for (std::size_t term = 0; term < kCorrelatorTerms; ++term) {
                if (c[term] == 0.0 || term_of(term)[party] != setting) continue;
                const Vec4 p = partial(t, party, slots_for(term, r.observables));
                g += c[term] * Eigen::Vector3d(p[1], p[2], p[3]);
            }
            if (!(g.norm() >= 1e-14)) continue;
            r.observables[slot] = Observable::from_vector(g);
            const double next = quantum_value(c, t, r.observables);
            if (decreased(value, next)) r.monotone = false;
            value = next;
        }
        if (value - before <= options.tolerance * std::max(1.0, std::abs(value))) break;
    }
    r.sweeps = std::min(r.sweeps, options.max_sweeps);
    r.value = value;
    return r;
}

SeesawResult seesaw_maximize(const RealCoefficients& c, const QuantumState& state, const SeesawOptions& options) {
    const int restarts = std::max(1, options.restarts);
    std::vector<SeesawResult> runs(static_cast<std::size_t>(restarts));
    parallel_for(runs.size(), options.threads, [&](std::size_t i) {
        Settings start;
        if (i == 0 && options.start) {
            start = *options.start;
        } else {
            std::mt19937_64 rng = task_rng(options.seed, i);
            start = random_settings(rng);
        }
        runs[i] = seesaw_run(c, state, start, options);
        runs[i].restart = static_cast<int>(i);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].value > runs[best].value) best = i;
    }
    SeesawResult result = runs[best];
    for (const auto& r : runs) result.monotone = result.monotone && r.monotone;
    return result;
}

SeesawResult seesaw_maximize(const BellExpression& expr, const QuantumState& state, const SeesawOptions& options) {
    return seesaw_maximize(real_correlators(expr), state, options);
}

StateFamily parse_state_family(std::string_view text) {
    if (text == "ghz" || text == "GHZ") return StateFamily::GHZ;
    if (text == "w" || text == "W") return StateFamily::W;
    throw FormatError("unknown state family '" + std::string(text) + "' (expected ghz or w)");
}

QuantumState family_state(StateFamily family) { return family == StateFamily::GHZ ? ghz_state() : w_state(); }

namespace {

ThresholdSearch threshold_descent(const QuantumState& state, LocalityClass cls, const Settings& start,
                                  const ThresholdOptions& options, std::uint64_t stream) {
    ThresholdSearch s;
    s.observables = start;
    ThresholdResult<double> current = threshold(born_behavior({state, s.observables}), cls);
    s.p = current.extent;
    s.functional = current.functional;
    s.history.push_back(s.p);
    SeesawOptions inner;
    inner.restarts = 1 + options.seesaw_restarts;
    for (s.rounds = 1; s.rounds <= options.max_rounds; ++s.rounds) {
        inner.start = s.observables;
        inner.seed = stream + static_cast<std::uint64_t>(s.rounds);
        const SeesawResult best = seesaw_maximize(correlators_of_functional(s.functional.coefficients), state, inner);
        ThresholdResult<double> next = threshold(born_behavior({state, best.observables}), cls);
        if (next.extent >= s.p) break;
        const bool small = next.extent > s.p - options.tolerance;
        s.p = next.extent;
        s.observables = best.observables;
        s.functional = next.functional;
        s.history.push_back(s.p);
        if (small) break;
    }
    s.rounds = std::min(s.rounds, options.max_rounds);
    return s;
}

}  // namespace

namespace {

struct Seed {
    std::string label;
    Settings settings;
};

// Settings maximizing catalog inequalities that bound this class, ranked by
// bound / quantum value.
std::vector<Seed> catalog_seeds(const QuantumState& state, LocalityClass cls, const ThresholdOptions& options) {
    const char* key = cls == LocalityClass::NS2 ? "ns2" : cls == LocalityClass::T2 ? "t2" : cls == LocalityClass::S2 ? "s2" : nullptr;
    if (!key || options.catalog_seeds <= 0) return {};
    const Catalog* catalog = nullptr;
    try {
        catalog = &Catalog::standard();
    } catch (const CatalogMissing&) {
        return {};
    }
    struct Ranked {
        double ratio;
        int family;
        Settings settings;
    };
    std::vector<Ranked> ranked(catalog->entries().size(), Ranked{std::numeric_limits<double>::infinity(), 0, {}});
    parallel_for(ranked.size(), options.threads, [&](std::size_t i) {
        const CatalogEntry& entry = catalog->entries()[i];
        auto it = entry.expression.bounds.find(key);
        if (it == entry.expression.bounds.end() || !it->second.exact) return;
        const RealCoefficients c = real_correlators(entry.expression);
        SeesawOptions inner;
        inner.restarts = options.catalog_seesaw_restarts;
        inner.seed = task_rng(options.seed, 1000000 + i)();
        const SeesawResult r = seesaw_maximize(c, state, inner);
        // Value of the expression on white noise is its constant term.
        const double excess = r.value - c[0];
        if (excess <= 0.0) return;
        ranked[i] = {(it->second.numeric - c[0]) / excess, entry.family, r.observables};
    });
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.ratio < b.ratio; });
    std::vector<Seed> seeds;
    for (const auto& r : ranked) {
        if (static_cast<int>(seeds.size()) >= options.catalog_seeds || !std::isfinite(r.ratio)) break;
        seeds.push_back({"family " + std::to_string(r.family), r.settings});
    }
    return seeds;
}

}  // namespace

ThresholdSearch optimize_threshold(const QuantumState& state, LocalityClass cls, const ThresholdOptions& options) {
    std::vector<Seed> seeds = catalog_seeds(state, cls, options);
    for (int i = 0; i < options.restarts; ++i) {
        std::mt19937_64 rng = task_rng(options.seed, static_cast<std::uint64_t>(i));
        seeds.push_back({"random #" + std::to_string(i), random_settings(rng)});
    }
    if (seeds.empty()) throw InvariantViolation("threshold search needs at least one starting point");
    std::vector<ThresholdSearch> runs(seeds.size());
    parallel_for(runs.size(), options.threads, [&](std::size_t i) {
        runs[i] = threshold_descent(state, cls, seeds[i].settings, options, task_rng(options.seed, 2000000 + i)());
        runs[i].start = seeds[i].label;
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].p < runs[best].p) best = i;
    }
    ThresholdSearch result = runs[best];
    result.p = std::min(result.p, 1.0);
    return result;
}

ThresholdSearch optimize_threshold(StateFamily family, LocalityClass cls, const ThresholdOptions& options) {
    return optimize_threshold(family_state(family), cls, options);
}

std::vector<PureStateParams> state_grid(int resolution) {
    if (resolution < 2) throw InvariantViolation("grid resolution must be at least 2");
    const auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
    std::vector<double> angles, phases;
    for (int k = 0; k < resolution; ++k) {
        // Interior angles keep every lambda positive, so each grid state passes the entanglement guards.
        angles.push_back((k + 0.5) * (std::numbers::pi / 2) / resolution);
        phases.push_back(k * std::numbers::pi / (resolution - 1));
    }
    std::vector<PureStateParams> grid;
    for (double a1 : angles)
        for (double a2 : angles)
            for (double a3 : angles)
                for (double a4 : angles)
                    for (double phi : phases) {
                        PureStateParams p;
                        p.lambda = {clean(std::cos(a1)), clean(std::sin(a1) * std::cos(a2)),
                                    clean(std::sin(a1) * std::sin(a2) * std::cos(a3)),
                                    clean(std::sin(a1) * std::sin(a2) * std::sin(a3) * std::cos(a4)),
                                    clean(std::sin(a1) * std::sin(a2) * std::sin(a3) * std::sin(a4))};
                        p.phi = phi;
                        grid.push_back(p);
                    }
    return grid;
}

ScanReport scan_states(const BellExpression& expr, const std::vector<PureStateParams>& states, const ScanOptions& options) {
    ScanReport report;
    report.bound = options.bound;
    report.points.resize(states.size());
    const RealCoefficients c = real_correlators(expr);
    parallel_for(states.size(), options.threads, [&](std::size_t i) {
        ScanPoint& point = report.points[i];
        point.params = states[i];
        point.params.validate();
        if (!point.params.genuinely_tripartite()) {
            point.skipped = true;
            return;
        }
        SeesawOptions inner;
        inner.restarts = options.restarts;
        inner.seed = task_rng(options.seed, i)();
        const SeesawResult r = seesaw_maximize(c, point.params.state(), inner);
        point.best = r.value;
        point.observables = r.observables;
    });
    report.min_violation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const ScanPoint& p = report.points[i];
        if (p.skipped) {
            ++report.skipped;
            continue;
        }
        ++report.evaluated;
        const double violation = p.best - report.bound;
        report.min_violation = std::min(report.min_violation, violation);
        if (!(violation > 0.0)) report.non_violating.push_back(i);
    }
    if (report.evaluated == 0) report.min_violation = 0.0;
    return report;
}

ScanReport scan_pure_states(const BellExpression& expr, int resolution, const ScanOptions& options) {
    return scan_states(expr, state_grid(resolution), options);
}

std::string scan_report_text(const ScanReport& report) {
    std::ostringstream out;
    out.precision(10);
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const ScanPoint& p = report.points[i];
        out << i << " " << p.params.describe() << " ";
        if (p.skipped) {
            out << "skipped (not genuinely tripartite entangled)\n";
        } else {
            out << "best=" << p.best << " violation=" << p.best - report.bound << "\n";
        }
    }
    out << "summary evaluated=" << report.evaluated << " skipped=" << report.skipped
        << " min_violation=" << report.min_violation << " non_violating=" << report.non_violating.size() << "\n";
    return out.str();
}

}  // namespace trinl
