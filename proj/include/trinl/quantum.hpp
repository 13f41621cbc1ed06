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


#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trinl/behavior.hpp"

namespace trinl {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Matrix8c = Eigen::Matrix<Complex, 8, 8>;
using Vector8c = Eigen::Matrix<Complex, 8, 1>;

/// 3-qubit density matrix, basis |abc> at index 4a + 2b + c.
class QuantumState {
   public:
    QuantumState();  // |000>
    static QuantumState from_density(const Matrix8c& rho, std::string name = {});
    static QuantumState from_pure(const Vector8c& psi, std::string name = {});

    const Matrix8c& density() const { return rho_; }
    const std::string& name() const { return name_; }

    /// p * this + (1 - p) * I/8.
    QuantumState with_white_noise(double p) const;
    /// Qubits reordered so that new party k is old party perm[k].
    QuantumState permuted(const std::array<int, 3>& perm) const;

   private:
    Matrix8c rho_;
    std::string name_;
};

QuantumState ghz_state();
QuantumState w_state();
QuantumState ghz_noisy(double p);
QuantumState w_noisy(double p);

/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct PureStateParams {
    std::array<double, 5> lambda{1, 0, 0, 0, 0};
    double phi = 0.0;

    /// Throws InvariantViolation unless lambda >= 0, sum lambda^2 = 1 and phi in [0, pi].
    void validate() const;
    /// l0 != 0, l2 + l4 != 0, l3 + l4 != 0 (to 1e-12).
    bool genuinely_tripartite() const;
    Vector8c vector() const;
    QuantumState state() const;
    std::string describe() const;
};

/// Projective +-1 qubit observable n.sigma; outcome 0 is the +1 eigenvalue.
class Observable {
   public:
    Observable() : Observable(0.0, 0.0) {}
    Observable(double theta, double phi);
    static Observable from_vector(const Eigen::Vector3d& n);
    static Observable sigma_x() { return from_vector({1, 0, 0}); }
    static Observable sigma_y() { return from_vector({0, 1, 0}); }
    static Observable sigma_z() { return from_vector({0, 0, 1}); }

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    const Eigen::Vector3d& bloch() const { return n_; }
    Matrix2c matrix() const;
    Matrix2c projector(int outcome) const;

   private:
    double theta_ = 0.0, phi_ = 0.0;
    Eigen::Vector3d n_;
};

/// Observables indexed 2 * party + setting.
using Settings = std::array<Observable, 6>;

struct QuantumScenario {
    QuantumState state;
    Settings observables;

    const Observable& observable(int party, int setting) const { return observables[static_cast<std::size_t>(2 * party + setting)]; }
};

/// p(abc|XYZ) = Tr[rho (P^A_{a|X} x P^B_{b|Y} x P^C_{c|Z})].
RealBehavior born_behavior(const QuantumScenario& s);

/// T[i][j][k] = Tr[rho s_i x s_j x s_k] with s_0 = I and s_1..3 the Pauli matrices.
using CorrelationTensor = std::array<double, 64>;
CorrelationTensor correlation_tensor(const QuantumState& state);

/// Full-body correlators from the tensor and the Bloch vectors.
CorrelatorForm<double> quantum_correlators(const CorrelationTensor& t, const Settings& observables);

Matrix2c pauli(int i);  // 0 = identity

/// Records {"party": "A", "setting": 0, "theta": .., "phi": ..}, one per line.
std::string settings_to_text(const Settings& observables);
Settings settings_from_text(std::string_view text);
void write_settings_file(const std::filesystem::path& path, const Settings& observables);
Settings read_settings_file(const std::filesystem::path& path);

/// Alice and Bob: 0 -> sigma_z, 1 -> sigma_x; Charles: 0 -> (sigma_z - sigma_x)/sqrt 2,
/// 1 -> (sigma_z + sigma_x)/sqrt 2. This labeling of Charles's inputs is the one
/// for which <A0B0> + <A0C0> + <B0C1> - <A1B1C0> + <A1B1C1> reaches 1 + 2 sqrt 2.
Settings ghz_oldineq_settings();

}  // namespace trinl
