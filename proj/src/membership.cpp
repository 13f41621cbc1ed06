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

#include "trinl/membership.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "trinl/linalg.hpp"

namespace trinl {

namespace {

template <typename T>
bool nonzero(const T& v) {
    return !Arithmetic<T>::is_zero(v);
}

ClassSystem hull_system(LocalityClass cls, const std::vector<Generator>& gens) {
    ClassSystem s;
    s.cls = cls;
    s.hull = true;
    for (const auto& g : gens) {
        s.keys.push_back({g.group, std::nullopt, -1, g.label});
        s.points.push_back(g.point);
        s.strategy_points.push_back(g.point);
        s.internal.emplace_back();
        s.column_block.push_back(0);
        s.in_mass.push_back(true);
    }
    return s;
}

ClassSystem ns_system() {
    ClassSystem s;
    s.cls = LocalityClass::NS;
    const auto& eqs = independent_no_signalling_equalities();
    s.internal_rows = eqs.size();
    s.internal_block.assign(eqs.size(), 0);
    for (std::size_t e = 0; e < kEntries; ++e) {
        Behavior unit;
        unit[e] = 1;
        const Triple in = inputs_of(e), out = outcomes_of(e);
        s.keys.push_back({std::nullopt, std::nullopt, -1,
                          "p[" + std::to_string(out[0]) + std::to_string(out[1]) + std::to_string(out[2]) + "|" +
                              std::to_string(in[0]) + std::to_string(in[1]) + std::to_string(in[2]) + "]"});
        s.points.push_back(unit);
        s.strategy_points.push_back(unit);
        std::vector<std::pair<std::size_t, Rational>> col;
        for (std::size_t r = 0; r < eqs.size(); ++r)
            if (eqs[r].coefficients[e] != 0) col.emplace_back(r, Rational(eqs[r].coefficients[e]));
        s.internal.push_back(std::move(col));
        s.column_block.push_back(0);
        s.in_mass.push_back(in == Triple{0, 0, 0});
    }
    return s;
}

// Ordered decompositions: per bipartition, weights over (isolated strategy, one-way strategy)
// for each ordering. K2 has only the reconstruction equality, T2 adds the per-lambda mass
// coupling, and the NS2 constraint form adds per-lambda equality of the bipartite parts.
ClassSystem ordered_system(LocalityClass cls, Formulation formulation) {
    ClassSystem s;
    s.cls = cls;
    s.formulation = formulation;
    s.blocks = 3;
    const bool coupling = cls == LocalityClass::T2 || formulation == Formulation::NS2Constraints;
    const bool bipartite = formulation == Formulation::NS2Constraints;
    for (Bipartition bp : kAllBipartitions) {
        const int block = static_cast<int>(bp);
        const std::size_t first_column = s.keys.size();
        const auto parties = parties_of(bp);
        const auto f = static_cast<std::size_t>(index_of(parties.first)), sc = static_cast<std::size_t>(index_of(parties.second)),
                   iso = static_cast<std::size_t>(index_of(parties.isolated));
        std::vector<RationalRow> candidates;
        const std::size_t ncols = 512;
        const std::size_t recon_rows = kEntries, coupling_rows = coupling ? 4 : 0, bip_rows = bipartite ? 64 : 0;
        candidates.assign(recon_rows + coupling_rows + bip_rows, RationalRow(ncols, Rational(0)));
        for (Direction d : {Direction::FirstBeforeSecond, Direction::SecondBeforeFirst}) {
            const OrderingDirection od{bp, d};
            const int sign = d == Direction::FirstBeforeSecond ? 1 : -1;
            const auto& gens = one_way_generators(od);
            for (std::size_t idx = 0; idx < gens.size(); ++idx) {
                const auto& g = gens[idx];
                const int lambda = static_cast<int>(idx % 4);
                const std::size_t local_col = s.keys.size() - first_column;
                s.keys.push_back({bp, d, lambda, g.label});
                s.points.push_back(d == Direction::FirstBeforeSecond ? g.point : Behavior{});
                s.strategy_points.push_back(g.point);
                s.column_block.push_back(block);
                s.in_mass.push_back(d == Direction::FirstBeforeSecond);
                for (std::size_t e = 0; e < kEntries; ++e)
                    if (sgn(g.point[e]) != 0) candidates[e][local_col] = sign * g.point[e];
                if (coupling) candidates[recon_rows + static_cast<std::size_t>(lambda)][local_col] = sign;
                if (bipartite) {
                    for (std::size_t e = 0; e < kEntries; ++e) {
                        const Triple in = inputs_of(e), out = outcomes_of(e);
                        if (in[iso] != 0) continue;
                        if (sgn(g.point[e]) == 0) continue;
                        const std::size_t pair_index =
                            static_cast<std::size_t>(((in[f] * 2 + in[sc]) * 2 + out[f]) * 2 + out[sc]);
                        candidates[recon_rows + coupling_rows + static_cast<std::size_t>(lambda) * 16 + pair_index][local_col] +=
                            sign * g.point[e];
                    }
                }
            }
        }
        const auto keep = independent_rows(candidates);
        std::vector<long> row_of(candidates.size(), -1);
        for (std::size_t k = 0; k < keep.size(); ++k) {
            row_of[keep[k]] = static_cast<long>(s.internal_rows + k);
            s.internal_block.push_back(block);
        }
        s.internal_rows += keep.size();
        for (std::size_t c = 0; c < ncols; ++c) {
            std::vector<std::pair<std::size_t, Rational>> col;
            for (std::size_t r = 0; r < candidates.size(); ++r)
                if (row_of[r] >= 0 && sgn(candidates[r][c]) != 0) col.emplace_back(static_cast<std::size_t>(row_of[r]), candidates[r][c]);
            s.internal.push_back(std::move(col));
        }
    }
    return s;
}

template <typename T, typename U>
T dot(const std::array<T, kEntries>& f, const BasicBehavior<U>& g) {
    T s(0);
    for (std::size_t e = 0; e < kEntries; ++e) {
        if constexpr (std::is_same_v<U, Rational>) {
            if (sgn(g[e]) != 0) s += f[e] * to_scalar<T>(g[e]);
        } else {
            s += f[e] * g[e];
        }
    }
    return s;
}

template <typename T>
LpColumn<T> column_of(const ClassSystem& system, std::size_t c, bool behavior_rows, std::size_t internal_offset,
                      const std::vector<long>* internal_map, std::size_t mass_row) {
    LpColumn<T> col;
    if (behavior_rows) {
        for (std::size_t e = 0; e < kEntries; ++e)
            if (sgn(system.points[c][e]) != 0) col.entries.emplace_back(e, to_scalar<T>(system.points[c][e]));
    }
    for (const auto& [r, v] : system.internal[c]) {
        const long row = internal_map ? (*internal_map)[r] : static_cast<long>(r);
        if (row >= 0) col.entries.emplace_back(internal_offset + static_cast<std::size_t>(row), to_scalar<T>(v));
    }
    if (system.in_mass[c]) col.entries.emplace_back(mass_row, T(1));
    return col;
}

template <typename T>
void normalize(SeparatingFunctional<T>& s) {
    if constexpr (std::is_same_v<T, Rational>) {
        mpz_class lcm = 1, gcd = 0;
        for (const auto& c : s.coefficients) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        for (const auto& c : s.coefficients) {
            mpz_class v = c.get_num() * (lcm / c.get_den());
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
        }
        if (gcd == 0) return;
        const Rational factor(lcm, gcd);
        for (auto& c : s.coefficients) c *= factor;
        s.offset *= factor;
        s.gap *= factor;
    } else {
        double m = 0.0;
        for (double c : s.coefficients) m = std::max(m, std::abs(c));
        if (m == 0.0) return;
        for (auto& c : s.coefficients) c /= m;
        s.offset /= m;
        s.gap /= m;
    }
}

template <typename T>
T functional_max_for(const ClassSystem& system, const std::array<T, kEntries>& f) {
    if (system.hull) return hull_maximum(f, system.cls).value;
    return lp_maximum(f, system.cls, system.formulation).value;
}

template <typename T>
DecompositionCertificate<T> decomposition_from(const ClassSystem& system, const std::vector<T>& x) {
    DecompositionCertificate<T> cert;
    cert.cls = system.cls;
    for (std::size_t c = 0; c < system.columns(); ++c) {
        if (!nonzero(x[c])) continue;
        cert.weights.push_back({c, system.keys[c], x[c]});
        for (std::size_t e = 0; e < kEntries; ++e)
            if (sgn(system.points[c][e]) != 0) cert.reconstruction[e] += x[c] * to_scalar<T>(system.points[c][e]);
        if (const auto& dir = system.keys[c].direction) {
            const auto k = static_cast<std::size_t>(*system.keys[c].pair);
            auto& slot = *dir == Direction::FirstBeforeSecond ? cert.hybrid_first[k] : cert.hybrid_second[k];
            if (!slot) slot = BasicBehavior<T>{};
            for (std::size_t e = 0; e < kEntries; ++e)
                if (sgn(system.strategy_points[c][e]) != 0) (*slot)[e] += x[c] * to_scalar<T>(system.strategy_points[c][e]);
        }
    }
    return cert;
}

const ClassSystem& system_for(LocalityClass cls, Formulation formulation) {
    return class_system(cls, cls == LocalityClass::NS2 ? formulation : Formulation::Default);
}

}  // namespace

std::string to_string(LocalityClass cls) {
    switch (cls) {
        case LocalityClass::Local:
            return "local";
        case LocalityClass::NS2:
            return "ns2";
        case LocalityClass::T2:
            return "t2";
        case LocalityClass::K2:
            return "k2";
        case LocalityClass::S2:
            return "s2";
        case LocalityClass::NS:
            break;
    }
    return "ns";
}

LocalityClass parse_class(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (LocalityClass c : kAllClasses)
        if (to_string(c) == lower) return c;
    throw FormatError("unknown locality class: " + std::string(text));
}

const ClassSystem& class_system(LocalityClass cls, Formulation formulation) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<ClassSystem>> cache;
    if (cls != LocalityClass::NS2) formulation = Formulation::Default;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{static_cast<int>(cls), static_cast<int>(formulation)}];
    if (!slot) {
        switch (cls) {
            case LocalityClass::Local:
                slot = std::make_unique<ClassSystem>(hull_system(cls, local_generators()));
                break;
            case LocalityClass::NS2:
                slot = std::make_unique<ClassSystem>(formulation == Formulation::NS2Constraints
                                                         ? ordered_system(cls, formulation)
                                                         : hull_system(cls, ns2_generators()));
                break;
            case LocalityClass::S2:
                slot = std::make_unique<ClassSystem>(hull_system(cls, s2_generators()));
                break;
            case LocalityClass::T2:
            case LocalityClass::K2:
                slot = std::make_unique<ClassSystem>(ordered_system(cls, formulation));
                break;
            case LocalityClass::NS:
                slot = std::make_unique<ClassSystem>(ns_system());
                break;
        }
    }
    return *slot;
}

template <typename T>
LpProblem<T> membership_problem(const ClassSystem& system, const BasicBehavior<T>& b) {
    LpProblem<T> p;
    for (std::size_t e = 0; e < kEntries; ++e) p.add_row(b[e]);
    for (std::size_t r = 0; r < system.internal_rows; ++r) p.add_row(T(0));
    p.add_row(T(1));
    for (std::size_t c = 0; c < system.columns(); ++c)
        p.add_column(column_of<T>(system, c, true, kEntries, nullptr, system.mass_row()));
    return p;
}

template <typename T>
Classification<T> classify(const BasicBehavior<T>& b, LocalityClass cls, Formulation formulation) {
    const ClassSystem& system = system_for(cls, formulation);
    const LpProblem<T> problem = membership_problem(system, b);
    const LpOutcome<T> out = solve(problem);
    Classification<T> result;
    result.cls = cls;
    if (out.status == LpStatus::Optimal) {
        result.member = true;
        result.decomposition = decomposition_from(system, out.primal);
        return result;
    }
    if (out.status != LpStatus::Optimal && out.status != LpStatus::Infeasible)
        throw InvariantViolation("membership LP reported " + to_string(out.status));
    SeparatingFunctional<T> sep;
    for (std::size_t e = 0; e < kEntries; ++e) sep.coefficients[e] = out.dual[e];
    normalize(sep);
    sep.offset = functional_max_for(system, sep.coefficients);
    sep.gap = dot(sep.coefficients, b) - sep.offset;
    result.functional = sep;
    return result;
}

template <typename T>
std::string verify_certificate(const BasicBehavior<T>& b, const Classification<T>& result) {
    const ClassSystem& system = class_system(result.cls, Formulation::Default);
    if (result.member) {
        if (!result.decomposition) return "member verdict without decomposition";
        const auto& cert = *result.decomposition;
        const ClassSystem* sys = &system;
        if (result.cls == LocalityClass::NS2 && !cert.weights.empty() && cert.weights.front().key.direction)
            sys = &class_system(LocalityClass::NS2, Formulation::NS2Constraints);
        BasicBehavior<T> rebuilt;
        T mass(0);
        std::array<BasicBehavior<T>, 3> first{}, second{};
        std::map<std::pair<int, int>, T> lambda_mass;
        std::map<std::pair<int, int>, std::array<T, 16>> lambda_pair;
        for (const auto& w : cert.weights) {
            if (!Arithmetic<T>::nonnegative(w.weight)) return "negative weight on " + w.key.label;
            if (w.column >= sys->columns() || sys->keys[w.column].label != w.key.label) return "weight key mismatch: " + w.key.label;
            const Behavior& g = sys->strategy_points[w.column];
            if (sys->in_mass[w.column] && sys->cls != LocalityClass::NS) mass += w.weight;
            for (std::size_t e = 0; e < kEntries; ++e) {
                if (sgn(sys->points[w.column][e]) != 0) rebuilt[e] += w.weight * to_scalar<T>(sys->points[w.column][e]);
            }
            if (w.key.direction) {
                const auto k = static_cast<std::size_t>(*w.key.pair);
                const bool is_first = *w.key.direction == Direction::FirstBeforeSecond;
                auto& target = is_first ? first[k] : second[k];
                for (std::size_t e = 0; e < kEntries; ++e)
                    if (sgn(g[e]) != 0) target[e] += w.weight * to_scalar<T>(g[e]);
                const T signed_w = is_first ? w.weight : T(-w.weight);
                lambda_mass[{static_cast<int>(k), w.key.isolated}] += signed_w;
                auto& pair = lambda_pair[{static_cast<int>(k), w.key.isolated}];
                const auto parties = parties_of(*w.key.pair);
                const auto f = static_cast<std::size_t>(index_of(parties.first)), s = static_cast<std::size_t>(index_of(parties.second)),
                           iso = static_cast<std::size_t>(index_of(parties.isolated));
                for (std::size_t e = 0; e < kEntries; ++e) {
                    const Triple in = inputs_of(e), out = outcomes_of(e);
                    if (in[iso] != 0 || sgn(g[e]) == 0) continue;
                    pair[static_cast<std::size_t>(((in[f] * 2 + in[s]) * 2 + out[f]) * 2 + out[s])] += signed_w * to_scalar<T>(g[e]);
                }
            }
        }
        if (sys->cls == LocalityClass::NS) {
            if (!is_no_signalling(rebuilt)) return "NS certificate is signalling";
        } else if (!Arithmetic<T>::equal(mass, T(1))) {
            return "total weight " + format_scalar(mass) + " differs from 1";
        }
        if (!approx_equal(rebuilt, b)) return "reconstruction differs from the behavior";
        if (!approx_equal(rebuilt, cert.reconstruction)) return "stored reconstruction differs from the weights";
        const bool ordered = result.cls == LocalityClass::T2 || result.cls == LocalityClass::K2 || sys != &system;
        if (ordered) {
            for (std::size_t k = 0; k < 3; ++k)
                if (!approx_equal(first[k], second[k])) return "hybrid term " + to_string(kAllBipartitions[k]) + " differs between orderings";
            if (result.cls != LocalityClass::K2) {
                for (const auto& [key, m] : lambda_mass)
                    if (!Arithmetic<T>::is_zero(m)) return "per-lambda masses differ between orderings";
            }
            if (result.cls == LocalityClass::NS2) {
                for (const auto& [key, pair] : lambda_pair)
                    for (const auto& v : pair)
                        if (!Arithmetic<T>::is_zero(v)) return "bipartite parts differ between orderings";
            }
        }
        return {};
    }
    if (!result.functional) return "nonmember verdict without functional";
    const auto& sep = *result.functional;
    const T value = dot(sep.coefficients, b);
    if (!(value - sep.offset > T(0)) || Arithmetic<T>::is_zero(T(value - sep.offset))) return "functional does not separate the behavior";
    const ClassSystem& sys = system_for(result.cls, Formulation::Default);
    if (sys.hull) {
        for (std::size_t c = 0; c < sys.columns(); ++c) {
            const T v = dot(sep.coefficients, sys.points[c]);
            if (v > sep.offset && !Arithmetic<T>::is_zero(T(v - sep.offset))) return "generator " + sys.keys[c].label + " exceeds the offset";
        }
    } else {
        const T best = lp_maximum(sep.coefficients, result.cls).value;
        if (best > sep.offset && !Arithmetic<T>::is_zero(T(best - sep.offset))) return "class maximum exceeds the offset";
    }
    return {};
}

template <typename T>
MaximizeResult<T> hull_maximum(const std::array<T, kEntries>& f, LocalityClass cls) {
    const ClassSystem& system = class_system(cls);
    if (!system.hull) throw InvariantViolation("hull scan needs a generator-defined class, got " + to_string(cls));
    MaximizeResult<T> best;
    bool have = false;
    for (std::size_t c = 0; c < system.columns(); ++c) {
        const T v = dot(f, system.points[c]);
        if (!have || v > best.value) {
            best.value = v;
            best.witness = system.keys[c].label;
            have = true;
            for (std::size_t e = 0; e < kEntries; ++e) best.maximizer[e] = to_scalar<T>(system.points[c][e]);
        }
    }
    return best;
}

template <typename T>
MaximizeResult<T> lp_maximum(const std::array<T, kEntries>& f, LocalityClass cls, Formulation formulation) {
    const ClassSystem& system = system_for(cls, formulation);
    MaximizeResult<T> best;
    bool have = false;
    for (int block = 0; block < system.blocks; ++block) {
        std::vector<long> internal_map(system.internal_rows, -1);
        std::size_t rows = 0;
        for (std::size_t r = 0; r < system.internal_rows; ++r)
            if (system.internal_block[r] == block) internal_map[r] = static_cast<long>(rows++);
        LpProblem<T> p;
        for (std::size_t r = 0; r < rows; ++r) p.add_row(T(0));
        const std::size_t mass = p.add_row(T(1));
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < system.columns(); ++c) {
            if (system.column_block[c] != block) continue;
            LpColumn<T> col = column_of<T>(system, c, false, 0, &internal_map, mass);
            col.cost = dot(f, system.points[c]);
            p.add_column(std::move(col));
            cols.push_back(c);
        }
        const LpOutcome<T> out = solve(p);
        if (out.status != LpStatus::Optimal) throw InvariantViolation("class maximization LP reported " + to_string(out.status));
        if (!have || out.value > best.value) {
            have = true;
            best.value = out.value;
            best.maximizer = BasicBehavior<T>{};
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (!nonzero(out.primal[i])) continue;
                for (std::size_t e = 0; e < kEntries; ++e)
                    if (sgn(system.points[cols[i]][e]) != 0) best.maximizer[e] += out.primal[i] * to_scalar<T>(system.points[cols[i]][e]);
            }
            best.witness = system.blocks > 1 ? "block " + to_string(kAllBipartitions[static_cast<std::size_t>(block)]) : "lp";
        }
    }
    return best;
}

template <typename T>
MaximizeResult<T> class_maximum(const std::array<T, kEntries>& f, LocalityClass cls, Formulation formulation) {
    if (cls == LocalityClass::Local || (cls == LocalityClass::NS2 && formulation == Formulation::Default))
        return hull_maximum(f, cls);
    if (cls != LocalityClass::S2) return lp_maximum(f, cls, formulation);
    // S2 restricted to no-signalling mixtures.
    const ClassSystem& system = class_system(LocalityClass::S2);
    const auto& eqs = independent_no_signalling_equalities();
    LpProblem<T> p;
    for (std::size_t r = 0; r < eqs.size(); ++r) p.add_row(T(0));
    const std::size_t mass = p.add_row(T(1));
    for (std::size_t c = 0; c < system.columns(); ++c) {
        LpColumn<T> col;
        const Behavior& g = system.points[c];
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            Rational v(0);
            for (std::size_t e = 0; e < kEntries; ++e)
                if (eqs[r].coefficients[e] != 0 && sgn(g[e]) != 0) v += eqs[r].coefficients[e] * g[e];
            if (sgn(v) != 0) col.entries.emplace_back(r, to_scalar<T>(v));
        }
        col.entries.emplace_back(mass, T(1));
        col.cost = dot(f, g);
        p.add_column(std::move(col));
    }
    const LpOutcome<T> out = solve(p);
    if (out.status != LpStatus::Optimal) throw InvariantViolation("S2 maximization LP reported " + to_string(out.status));
    MaximizeResult<T> best;
    best.value = out.value;
    for (std::size_t c = 0; c < system.columns(); ++c) {
        if (!nonzero(out.primal[c])) continue;
        for (std::size_t e = 0; e < kEntries; ++e)
            if (sgn(system.points[c][e]) != 0) best.maximizer[e] += out.primal[c] * to_scalar<T>(system.points[c][e]);
    }
    best.witness = "no-signalling S2 mixture";
    return best;
}

MaximizeResult<Rational> maximize(const BellExpression& expr, LocalityClass cls) {
    return class_maximum<Rational>(expr.probabilities(), cls);
}

MaximizeResult<double> maximize_double(const BellExpression& expr, LocalityClass cls) {
    std::array<double, kEntries> f{};
    for (std::size_t e = 0; e < kEntries; ++e) f[e] = expr.probabilities()[e].get_d();
    return class_maximum<double>(f, cls);
}

template <typename T>
ThresholdResult<T> threshold(const BasicBehavior<T>& b_target, LocalityClass cls) {
    const ClassSystem& system = class_system(cls);
    const BasicBehavior<T> u = BasicBehavior<T>::uniform();
    LpProblem<T> problem = membership_problem(system, u);
    LpColumn<T> pcol;
    for (std::size_t e = 0; e < kEntries; ++e) {
        const T d = b_target[e] - u[e];
        if (nonzero(d)) pcol.entries.emplace_back(e, T(-d));
    }
    ThresholdResult<T> result;
    if (pcol.entries.empty()) {
        result.p = result.extent = T(1);
        return result;
    }
    pcol.cost = T(1);
    pcol.lower = T(0);
    const std::size_t pidx = problem.add_column(std::move(pcol));
    const LpOutcome<T> out = solve(problem);
    if (out.status != LpStatus::Optimal) throw InvariantViolation("threshold LP reported " + to_string(out.status));
    result.extent = out.primal[pidx];
    result.p = result.extent < T(1) ? result.extent : T(1);
    std::vector<T> weights(out.primal.begin(), out.primal.begin() + static_cast<std::ptrdiff_t>(system.columns()));
    result.boundary = decomposition_from(system, weights);
    SeparatingFunctional<T> sep;
    for (std::size_t e = 0; e < kEntries; ++e) sep.coefficients[e] = -out.dual[e];
    normalize(sep);
    sep.offset = functional_max_for(system, sep.coefficients);
    sep.gap = dot(sep.coefficients, b_target) - sep.offset;
    result.functional = sep;
    return result;
}

ExtremalityReport ns2_extremality() {
    const auto& gens = ns2_generators();
    ExtremalityReport report;
    report.points = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        LpProblem<Rational> p;
        for (std::size_t e = 0; e < kEntries; ++e) p.add_row(gens[i].point[e]);
        const std::size_t mass = p.add_row(Rational(1));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            LpColumn<Rational> col;
            for (std::size_t e = 0; e < kEntries; ++e)
                if (sgn(gens[j].point[e]) != 0) col.entries.emplace_back(e, gens[j].point[e]);
            col.entries.emplace_back(mass, Rational(1));
            p.add_column(std::move(col));
        }
        if (solve(p).status == LpStatus::Infeasible) {
            ++report.extremal;
        } else {
            report.non_extremal.push_back(gens[i].label);
        }
    }
    return report;
}

#define TRINL_INSTANTIATE(T)                                                                                        \
    template LpProblem<T> membership_problem(const ClassSystem&, const BasicBehavior<T>&);                         \
    template Classification<T> classify(const BasicBehavior<T>&, LocalityClass, Formulation);                      \
    template std::string verify_certificate(const BasicBehavior<T>&, const Classification<T>&);                    \
    template MaximizeResult<T> hull_maximum(const std::array<T, kEntries>&, LocalityClass);                         \
    template MaximizeResult<T> lp_maximum(const std::array<T, kEntries>&, LocalityClass, Formulation);              \
    template MaximizeResult<T> class_maximum(const std::array<T, kEntries>&, LocalityClass, Formulation);           \
    template ThresholdResult<T> threshold(const BasicBehavior<T>&, LocalityClass);

TRINL_INSTANTIATE(Rational)
TRINL_INSTANTIATE(double)

#undef TRINL_INSTANTIATE

}  // namespace trinl
