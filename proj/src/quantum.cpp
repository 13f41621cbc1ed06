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


#include "trinl/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "trinl/behavior_io.hpp"
#include "trinl/errors.hpp"

namespace trinl {

namespace {

constexpr double kStateTolerance = 1e-12;
constexpr double kEigenTolerance = 1e-10;

Matrix8c kron3(const Matrix2c& a, const Matrix2c& b, const Matrix2c& c) {
    Matrix8c m;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            m(i, j) = a(i >> 2, j >> 2) * b((i >> 1) & 1, (j >> 1) & 1) * c(i & 1, j & 1);
        }
    }
    return m;
}

void validate_density(const Matrix8c& rho) {
    double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kStateTolerance) throw InvariantViolation("density matrix is not Hermitian");
    double trace_error = std::abs(rho.trace() - Complex(1.0));
    if (trace_error > kStateTolerance) throw InvariantViolation("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix8c> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kEigenTolerance) throw InvariantViolation("density matrix is not positive semidefinite");
}

}  // namespace

Matrix2c pauli(int i) {
    Matrix2c m;
    switch (i) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw InvariantViolation("Pauli index out of range");
    }
    return m;
}

QuantumState::QuantumState() : rho_(Matrix8c::Zero()) { rho_(0, 0) = 1.0; }

QuantumState QuantumState::from_density(const Matrix8c& rho, std::string name) {
    validate_density(rho);
    QuantumState s;
    s.rho_ = rho;
    s.name_ = std::move(name);
    return s;
}

QuantumState QuantumState::from_pure(const Vector8c& psi, std::string name) {
    if (std::abs(psi.norm() - 1.0) > kStateTolerance) throw InvariantViolation("state vector is not normalized");
    return from_density(psi * psi.adjoint(), std::move(name));
}

QuantumState QuantumState::with_white_noise(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw InvariantViolation("visibility outside [0,1]");
    QuantumState s;
    s.rho_ = p * rho_ + (1.0 - p) / 8.0 * Matrix8c::Identity();
    s.name_ = name_;
    return s;
}

QuantumState QuantumState::permuted(const std::array<int, 3>& perm) const {
    auto map = [&](int index) {
        int old = 0;
        for (int k = 0; k < 3; ++k) {
            int bit = (index >> (2 - k)) & 1;
            old |= bit << (2 - perm[static_cast<std::size_t>(k)]);
        }
        return old;
    };
    QuantumState s;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) s.rho_(i, j) = rho_(map(i), map(j));
    }
    s.name_ = name_;
    return s;
}

QuantumState ghz_state() {
    Vector8c psi = Vector8c::Zero();
    psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
    return QuantumState::from_pure(psi, "ghz");
}

QuantumState w_state() {
    Vector8c psi = Vector8c::Zero();
    psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);
    return QuantumState::from_pure(psi, "w");
}

QuantumState ghz_noisy(double p) { return ghz_state().with_white_noise(p); }
QuantumState w_noisy(double p) { return w_state().with_white_noise(p); }

void PureStateParams::validate() const {
    double norm = 0.0;
    for (double l : lambda) {
        if (l < 0.0) throw InvariantViolation("negative lambda");
        norm += l * l;
    }
    if (std::abs(norm - 1.0) > kStateTolerance) throw InvariantViolation("lambda is not normalized");
    if (phi < 0.0 || phi > std::numbers::pi) throw InvariantViolation("phase outside [0, pi]");
}

bool PureStateParams::genuinely_tripartite() const {
    return lambda[0] > kStateTolerance && lambda[2] + lambda[4] > kStateTolerance && lambda[3] + lambda[4] > kStateTolerance;
}

Vector8c PureStateParams::vector() const {
    Vector8c psi = Vector8c::Zero();
    psi(0) = lambda[0];
    psi(4) = lambda[1] * std::polar(1.0, phi);
    psi(5) = lambda[2];
    psi(6) = lambda[3];
    psi(7) = lambda[4];
    return psi;
}

QuantumState PureStateParams::state() const {
    validate();
    return QuantumState::from_pure(vector(), describe());
}

std::string PureStateParams::describe() const {
    std::ostringstream out;
    out.precision(6);
    out << "lambda=(" << lambda[0];
    for (std::size_t i = 1; i < 5; ++i) out << "," << lambda[i];
    out << ") phi=" << phi;
    return out.str();
}

Observable::Observable(double theta, double phi) : theta_(theta), phi_(phi) {
    n_ = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Observable Observable::from_vector(const Eigen::Vector3d& n) {
    double norm = n.norm();
    if (!(norm > 1e-14)) throw InvariantViolation("zero Bloch vector");
    Eigen::Vector3d u = n / norm;
    Observable o(std::acos(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x()));
    o.n_ = u;
    return o;
}

Matrix2c Observable::matrix() const { return n_.x() * pauli(1) + n_.y() * pauli(2) + n_.z() * pauli(3); }

Matrix2c Observable::projector(int outcome) const {
    double sign = outcome == 0 ? 1.0 : -1.0;
    return 0.5 * (pauli(0) + sign * matrix());
}

RealBehavior born_behavior(const QuantumScenario& s) {
    for (const auto& o : s.observables) {
        if (std::abs(o.bloch().norm() - 1.0) > kStateTolerance) throw InvariantViolation("observable is not a unit vector");
    }
    std::array<std::array<Matrix2c, 2>, 6> proj;
    for (std::size_t k = 0; k < 6; ++k) proj[k] = {s.observables[k].projector(0), s.observables[k].projector(1)};
    RealBehavior b;
    for (std::size_t e = 0; e < kEntries; ++e) {
        Triple in = inputs_of(e), out = outcomes_of(e);
        Matrix8c op = kron3(proj[static_cast<std::size_t>(in[0])][static_cast<std::size_t>(out[0])],
                            proj[static_cast<std::size_t>(2 + in[1])][static_cast<std::size_t>(out[1])],
                            proj[static_cast<std::size_t>(4 + in[2])][static_cast<std::size_t>(out[2])]);
        double p = (s.state.density() * op).trace().real();
        if (p < -kEigenTolerance) throw InvariantViolation("negative Born probability");
        b[e] = std::max(p, 0.0);
    }
    return b;
}

CorrelationTensor correlation_tensor(const QuantumState& state) {
    std::array<Matrix2c, 4> s{pauli(0), pauli(1), pauli(2), pauli(3)};
    CorrelationTensor t{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                t[static_cast<std::size_t>(16 * i + 4 * j + k)] = (state.density() * kron3(s[i], s[j], s[k])).trace().real();
            }
        }
    }
    return t;
}

CorrelatorForm<double> quantum_correlators(const CorrelationTensor& t, const Settings& observables) {
    CorrelatorForm<double> c;
    for (std::size_t term = 0; term < kCorrelatorTerms; ++term) {
        Triple tr = term_of(term);
        std::array<std::array<double, 4>, 3> u{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (tr[k] < 0) {
                u[k] = {1, 0, 0, 0};
            } else {
                const auto& n = observables[2 * k + static_cast<std::size_t>(tr[k])].bloch();
                u[k] = {0, n.x(), n.y(), n.z()};
            }
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (u[0][i] == 0.0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (u[1][j] == 0.0) continue;
                for (std::size_t k = 0; k < 4; ++k) sum += t[16 * i + 4 * j + k] * u[0][i] * u[1][j] * u[2][k];
            }
        }
        c[term] = sum;
    }
    return c;
}

std::string settings_to_text(const Settings& observables) {
    std::string out;
    for (std::size_t k = 0; k < 6; ++k) {
        nlohmann::ordered_json j;
        j["party"] = std::string(1, static_cast<char>('A' + k / 2));
        j["setting"] = k % 2;
        j["theta"] = observables[k].theta();
        j["phi"] = observables[k].phi();
        out += j.dump() + "\n";
    }
    return out;
}

Settings settings_from_text(std::string_view text) {
    Settings s;
    std::array<bool, 6> seen{};
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
            std::string party = j.at("party").get<std::string>();
            int setting = j.at("setting").get<int>();
            if (party.size() != 1 || party[0] < 'A' || party[0] > 'C' || (setting != 0 && setting != 1)) {
                throw FormatError("bad party or setting in '" + line + "'");
            }
            std::size_t k = static_cast<std::size_t>(2 * (party[0] - 'A') + setting);
            s[k] = Observable(j.at("theta").get<double>(), j.at("phi").get<double>());
            seen[k] = true;
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("angle record: ") + e.what());
        }
    }
    for (bool b : seen) {
        if (!b) throw FormatError("angle file must define both settings of every party");
    }
    return s;
}

void write_settings_file(const std::filesystem::path& path, const Settings& observables) {
    write_text_file(path, settings_to_text(observables));
}

Settings read_settings_file(const std::filesystem::path& path) { return settings_from_text(read_text_file(path)); }

Settings ghz_oldineq_settings() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Observable::sigma_z(), Observable::sigma_x(), Observable::sigma_z(), Observable::sigma_x(),
            Observable::from_vector({-r, 0, r}), Observable::from_vector({r, 0, r})};
}

}  // namespace trinl
