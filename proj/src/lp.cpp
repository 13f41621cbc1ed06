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

#include "trinl/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>

namespace trinl {

namespace {

// ---- numeric helpers ------------------------------------------------------

bool positive(double v, double tol) { return v > tol; }
bool positive(const Rational& v, double) { return sgn(v) > 0; }
bool is_zero(double v, double tol) { return std::abs(v) <= tol; }
bool is_zero(const Rational& v, double) { return sgn(v) == 0; }
double magnitude(double v) { return std::abs(v); }
double magnitude(const Rational& v) { return std::abs(v.get_d()); }

// ---- standard form: A x = b, x >= 0, b >= 0 ----------------------------------

template <typename T>
struct VariableMap {
    T offset{};
    std::vector<std::pair<std::size_t, int>> parts;  // (standard column, sign)
};

template <typename T>
struct StandardForm {
    std::size_t original_rows = 0;
    std::vector<std::vector<std::pair<std::size_t, T>>> cols;
    std::vector<T> cost;
    std::vector<T> b;
    std::vector<int> row_sign;
    std::vector<VariableMap<T>> vars;

    std::size_t m() const { return b.size(); }
    std::size_t n() const { return cols.size(); }
};

template <typename T>
StandardForm<T> standardize(const LpProblem<T>& p) {
    StandardForm<T> sf;
    sf.original_rows = p.rows();
    sf.b = p.rhs;
    for (const auto& col : p.columns) {
        VariableMap<T> map;
        auto add_part = [&](int sign) {
            std::vector<std::pair<std::size_t, T>> entries;
            for (const auto& [r, v] : col.entries) entries.emplace_back(r, sign > 0 ? T(v) : T(-v));
            sf.cols.push_back(std::move(entries));
            sf.cost.push_back(sign > 0 ? T(col.cost) : T(-col.cost));
            map.parts.emplace_back(sf.cols.size() - 1, sign);
        };
        if (col.lower) {
            map.offset = *col.lower;
            for (const auto& [r, v] : col.entries) sf.b[r] -= v * (*col.lower);
            add_part(+1);
        } else {
            map.offset = T(0);
            add_part(+1);
            add_part(-1);
        }
        if (col.upper) {
            const std::size_t row = sf.b.size();
            sf.b.push_back(*col.upper - map.offset);
            for (const auto& [k, sign] : map.parts) sf.cols[k].emplace_back(row, T(sign));
            sf.cols.push_back({{row, T(1)}});
            sf.cost.push_back(T(0));
        }
        sf.vars.push_back(std::move(map));
    }
    sf.row_sign.assign(sf.b.size(), 1);
    for (std::size_t r = 0; r < sf.b.size(); ++r) {
        if (sf.b[r] < 0) {
            sf.row_sign[r] = -1;
            sf.b[r] = -sf.b[r];
        }
    }
    for (auto& col : sf.cols)
        for (auto& [r, v] : col)
            if (sf.row_sign[r] < 0) v = -v;
    return sf;
}

// ---- dense tableau simplex ---------------------------------------------------

struct TableauResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<std::size_t> basis;  // per row; >= n means the row's artificial
    std::size_t entering = 0;        // unbounded direction column
    std::size_t pivots = 0;
};

template <typename T>
class Tableau {
   public:
    Tableau(const StandardForm<T>& sf, bool bland_only, std::size_t max_pivots)
        : m_(sf.m()), n_(sf.n()), width_(sf.n() + sf.m() + 1), bland_only_(bland_only), max_pivots_(max_pivots),
          t_(m_ * width_, T(0)), r_(width_, T(0)), basis_(m_), allowed_(n_ + m_, true) {
        for (std::size_t j = 0; j < n_; ++j)
            for (const auto& [row, v] : sf.cols[j]) at(row, j) += v;
        for (std::size_t i = 0; i < m_; ++i) {
            at(i, n_ + i) = T(1);
            at(i, width_ - 1) = sf.b[i];
            basis_[i] = n_ + i;
        }
        tol_ = 1e-9;
    }

    TableauResult run(const std::vector<T>& cost) {
        TableauResult res;
        // Phase 1: maximize -sum(artificials).
        for (std::size_t j = 0; j < width_; ++j) {
            T s(0);
            if (j < n_ || j == width_ - 1)
                for (std::size_t i = 0; i < m_; ++i) s += at(i, j);
            r_[j] = s;
        }
        iterate(res, true);
        phase1_value_ = r_[width_ - 1];
        if (positive(phase1_value_, tol_ * scale())) {
            phase1_duals_.resize(m_);
            for (std::size_t i = 0; i < m_; ++i) phase1_duals_[i] = T(-1) - r_[n_ + i];
            res.status = LpStatus::Infeasible;
            res.basis = basis_;
            res.pivots = pivots_;
            return res;
        }
        drive_out_artificials();
        for (std::size_t i = 0; i < m_; ++i) allowed_[n_ + i] = false;
        // Phase 2.
        for (std::size_t j = 0; j < width_; ++j) {
            T s = (j < n_) ? cost[j] : T(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] < n_ && !is_zero(at(i, j), 0.0)) s -= cost[basis_[i]] * at(i, j);
            }
            r_[j] = s;
        }
        if (iterate(res)) {
            res.status = LpStatus::Unbounded;
        } else {
            res.status = LpStatus::Optimal;
        }
        res.basis = basis_;
        res.pivots = pivots_;
        return res;
    }

    std::vector<T> basic_values() const {
        std::vector<T> x(m_);
        for (std::size_t i = 0; i < m_; ++i) x[i] = at(i, width_ - 1);
        return x;
    }
    /// Row duals of the current phase (artificial reduced costs).
    std::vector<T> phase2_duals() const {
        std::vector<T> y(m_);
        for (std::size_t i = 0; i < m_; ++i) y[i] = -r_[n_ + i];
        return y;
    }
    const std::vector<T>& phase1_duals() const { return phase1_duals_; }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(m_);
        for (std::size_t i = 0; i < m_; ++i) c[i] = at(i, j);
        return c;
    }

   private:
    T& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

    // Dantzig pricing stalls far less than Bland on these highly degenerate
    // systems; Bland only takes over after a long degenerate run.
    static constexpr std::size_t kStallLimit = 2000;

    double scale() const { return 1.0 + static_cast<double>(m_); }

    // Returns true when the LP is unbounded in the current phase (entering column stored).
    bool iterate(TableauResult& res, bool stop_at_zero = false) {
        std::size_t degenerate_run = 0;
        bool bland = bland_only_;
        while (true) {
            if (pivots_ >= max_pivots_) throw NumericalBreakdown("simplex pivot limit reached");
            std::size_t q = width_;
            double best = 0.0;
            for (std::size_t j = 0; j + 1 < width_; ++j) {
                if (!allowed_[j] || !positive(r_[j], tol_)) continue;
                if (bland) {
                    q = j;
                    break;
                }
                const double v = magnitude(r_[j]);
                if (v > best) {
                    best = v;
                    q = j;
                }
            }
            if (q == width_) return false;
            if (stop_at_zero && is_zero(r_[width_ - 1], tol_ * scale())) return false;
            std::size_t p = m_;
            T best_ratio{};
            if constexpr (std::is_same_v<T, double>) {
                p = harris_row(q, bland);
                if (p < m_) best_ratio = std::max(at(p, width_ - 1), 0.0) / at(p, q);
            } else {
                for (std::size_t i = 0; i < m_; ++i) {
                    const T& a = at(i, q);
                    if (!positive(a, tol_)) continue;
                    T ratio = at(i, width_ - 1) / a;
                    if (p == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[p])) {
                        p = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (p == m_) {
                res.entering = q;
                return true;
            }
            const bool degenerate = is_zero(best_ratio, tol_);
            pivot(p, q);
            if (degenerate) {
                if (++degenerate_run > kStallLimit) bland = true;
            } else {
                degenerate_run = 0;
                bland = bland_only_;
            }
        }
    }

    // Two-pass (Harris) ratio test: bound the step with rhs relaxed by kFeasTol,
    // then take the largest pivot among rows within that bound.
    std::size_t harris_row(std::size_t q, bool bland) const {
        constexpr double kPivotTol = 1e-9, kFeasTol = 1e-9;
        double limit = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m_; ++i) {
            const double a = at(i, q);
            if (a > kPivotTol) limit = std::min(limit, (std::max(at(i, width_ - 1), 0.0) + kFeasTol) / a);
        }
        std::size_t p = m_;
        double best = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            const double a = at(i, q);
            if (a <= kPivotTol || std::max(at(i, width_ - 1), 0.0) / a > limit) continue;
            if (p == m_ || (bland ? basis_[i] < basis_[p] : a > best)) {
                p = i;
                best = a;
            }
        }
        return p;
    }

    void pivot(std::size_t p, std::size_t q) {
        ++pivots_;
        const T inv = T(1) / at(p, q);
        T* prow = &t_[p * width_];
        std::vector<std::size_t> nz;
        nz.reserve(width_);
        for (std::size_t j = 0; j < width_; ++j) {
            if (is_zero(prow[j], 0.0)) continue;
            prow[j] *= inv;
            nz.push_back(j);
        }
        prow[q] = T(1);
        auto eliminate = [&](T* row) {
            const T factor = row[q];
            if (is_zero(factor, 0.0)) return;
            for (std::size_t j : nz) {
                row[j] -= factor * prow[j];
                if constexpr (std::is_same_v<T, double>) {
                    if (std::abs(row[j]) < 1e-13) row[j] = 0.0;
                }
            }
            row[q] = T(0);
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != p) eliminate(&t_[i * width_]);
        eliminate(r_.data());
        basis_[p] = q;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t best_j = n_;
            double best = tol_;
            for (std::size_t j = 0; j < n_; ++j) {
                const double v = magnitude(at(i, j));
                if (v > best) {
                    best = v;
                    best_j = j;
                    if (!std::is_same_v<T, double>) break;
                }
            }
            if (best_j < n_) pivot(i, best_j);
        }
    }

    std::size_t m_, n_, width_;
    bool bland_only_;
    std::size_t max_pivots_;
    std::vector<T> t_;
    std::vector<T> r_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
    double tol_;
    std::size_t pivots_ = 0;
    T phase1_value_{};
    std::vector<T> phase1_duals_;
};

// ---- mapping back ----------------------------------------------------------

template <typename T>
LpOutcome<T> assemble(const LpProblem<T>& p, const StandardForm<T>& sf, LpStatus status, const std::vector<T>& x_std,
                      const std::vector<T>& y_std, const std::vector<T>& ray_std) {
    LpOutcome<T> out;
    out.status = status;
    if (!x_std.empty()) {
        out.primal.resize(p.columns.size());
        out.value = T(0);
        for (std::size_t j = 0; j < p.columns.size(); ++j) {
            T v = sf.vars[j].offset;
            for (const auto& [k, sign] : sf.vars[j].parts) v += sign > 0 ? x_std[k] : T(-x_std[k]);
            out.primal[j] = v;
            out.value += p.columns[j].cost * v;
        }
    }
    if (!y_std.empty()) {
        out.dual.resize(sf.original_rows);
        for (std::size_t i = 0; i < sf.original_rows; ++i) out.dual[i] = sf.row_sign[i] > 0 ? y_std[i] : T(-y_std[i]);
    }
    if (!ray_std.empty()) {
        out.ray.resize(p.columns.size());
        for (std::size_t j = 0; j < p.columns.size(); ++j) {
            T v(0);
            for (const auto& [k, sign] : sf.vars[j].parts) v += sign > 0 ? ray_std[k] : T(-ray_std[k]);
            out.ray[j] = v;
        }
    }
    return out;
}

template <typename T>
std::vector<T> expand_basic(const std::vector<std::size_t>& basis, const std::vector<T>& values, std::size_t n) {
    std::vector<T> x(n, T(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] < n) x[basis[i]] = values[i];
    return x;
}

// ---- exact basis re-solve -----------------------------------------------------

std::optional<Rational> small_fraction(double v) {
    if (!std::isfinite(v)) return std::nullopt;
    if (std::abs(v) < 1e-11) return Rational(0);
    const double tol = 1e-10 * std::max(1.0, std::abs(v));
    double x = v;
    long long h_prev = 1, h = static_cast<long long>(std::floor(x));
    long long k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 40; ++iter) {
        if (std::abs(static_cast<double>(h) / static_cast<double>(k) - v) <= tol) {
            Rational r(static_cast<long>(h), static_cast<long>(k));
            r.canonicalize();
            return r;
        }
        if (frac < 1e-15) break;
        x = 1.0 / frac;
        const double a_d = std::floor(x);
        if (a_d > 1e12) break;
        const long long a = static_cast<long long>(a_d);
        frac = x - a_d;
        const long long h_next = a * h + h_prev, k_next = a * k + k_prev;
        if (k_next > 1000000000LL || std::abs(h_next) > 4000000000000000000LL / 4) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

class ExactBasis {
   public:
    ExactBasis(const StandardForm<Rational>& sf, const std::vector<std::size_t>& basis) : sf_(sf), basis_(basis), m_(sf.m()) {
        dense_.resize(m_ * m_);
        for (std::size_t c = 0; c < m_; ++c) {
            const std::size_t k = basis_[c];
            if (k < sf_.n()) {
                for (const auto& [r, v] : sf_.cols[k]) {
                    dense_[r * m_ + c] += v.get_d();
                }
            } else {
                dense_[(k - sf_.n()) * m_ + c] = 1.0;
            }
        }
    }

    /// Exact B x = rhs (or B^T x = rhs).
    std::vector<Rational> solve(const std::vector<Rational>& rhs, bool transpose) {
        if (auto fast = snapped(rhs, transpose)) return *fast;
        factorize();
        return lu_solve(rhs, transpose);
    }

    bool singular() {
        factorize();
        return singular_;
    }

    std::vector<Rational> multiply(const std::vector<Rational>& x, bool transpose) const {
        std::vector<Rational> out(m_, Rational(0));
        for (std::size_t c = 0; c < m_; ++c) {
            const std::size_t k = basis_[c];
            if (k < sf_.n()) {
                for (const auto& [r, v] : sf_.cols[k]) {
                    if (transpose) {
                        out[c] += v * x[r];
                    } else {
                        out[r] += v * x[c];
                    }
                }
            } else {
                const std::size_t r = k - sf_.n();
                if (transpose) {
                    out[c] += x[r];
                } else {
                    out[r] += x[c];
                }
            }
        }
        return out;
    }

   private:
    std::optional<std::vector<Rational>> snapped(const std::vector<Rational>& rhs, bool transpose) {
        Eigen::MatrixXd mat = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
            dense_.data(), static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(m_));
        if (transpose) mat.transposeInPlace();
        Eigen::VectorXd b(static_cast<Eigen::Index>(m_));
        for (std::size_t i = 0; i < m_; ++i) b[static_cast<Eigen::Index>(i)] = rhs[i].get_d();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(mat);
        Eigen::VectorXd x = lu.solve(b);
        std::vector<Rational> out(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            auto r = small_fraction(x[static_cast<Eigen::Index>(i)]);
            if (!r) return std::nullopt;
            out[i] = *r;
        }
        if (multiply(out, transpose) != rhs) return std::nullopt;
        return out;
    }

    void factorize() {
        if (factored_) return;
        factored_ = true;
        lu_.assign(m_ * m_, Rational(0));
        for (std::size_t c = 0; c < m_; ++c) {
            const std::size_t k = basis_[c];
            if (k < sf_.n()) {
                for (const auto& [r, v] : sf_.cols[k]) lu_[r * m_ + c] += v;
            } else {
                lu_[(k - sf_.n()) * m_ + c] = 1;
            }
        }
        perm_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) perm_[i] = i;
        for (std::size_t col = 0; col < m_; ++col) {
            std::size_t piv = m_;
            std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = col; i < m_; ++i) {
                if (sgn(lu_[i * m_ + col]) == 0) continue;
                std::size_t nnz = 0;
                for (std::size_t j = col; j < m_; ++j) nnz += sgn(lu_[i * m_ + j]) != 0;
                if (nnz < best_nnz) {
                    best_nnz = nnz;
                    piv = i;
                }
            }
            if (piv == m_) {
                singular_ = true;
                return;
            }
            if (piv != col) {
                for (std::size_t j = 0; j < m_; ++j) std::swap(lu_[piv * m_ + j], lu_[col * m_ + j]);
                std::swap(perm_[piv], perm_[col]);
            }
            const Rational& d = lu_[col * m_ + col];
            for (std::size_t i = col + 1; i < m_; ++i) {
                Rational& e = lu_[i * m_ + col];
                if (sgn(e) == 0) continue;
                e /= d;
                for (std::size_t j = col + 1; j < m_; ++j) {
                    const Rational& u = lu_[col * m_ + j];
                    if (sgn(u) != 0) lu_[i * m_ + j] -= e * u;
                }
            }
        }
    }

    // P B = L U with unit-diagonal L stored below the diagonal.
    std::vector<Rational> lu_solve(const std::vector<Rational>& rhs, bool transpose) {
        if (singular_) throw NumericalBreakdown("basis matrix is singular in exact arithmetic");
        std::vector<Rational> x(m_);
        if (!transpose) {
            for (std::size_t i = 0; i < m_; ++i) x[i] = rhs[perm_[i]];
            for (std::size_t i = 0; i < m_; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (sgn(lu_[i * m_ + j]) != 0) x[i] -= lu_[i * m_ + j] * x[j];
            for (std::size_t i = m_; i-- > 0;) {
                for (std::size_t j = i + 1; j < m_; ++j)
                    if (sgn(lu_[i * m_ + j]) != 0) x[i] -= lu_[i * m_ + j] * x[j];
                x[i] /= lu_[i * m_ + i];
            }
            return x;
        }
        // B^T y = rhs  ->  U^T L^T P y = rhs.
        std::vector<Rational> w = rhs;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (sgn(lu_[j * m_ + i]) != 0) w[i] -= lu_[j * m_ + i] * w[j];
            w[i] /= lu_[i * m_ + i];
        }
        for (std::size_t i = m_; i-- > 0;)
            for (std::size_t j = i + 1; j < m_; ++j)
                if (sgn(lu_[j * m_ + i]) != 0) w[i] -= lu_[j * m_ + i] * w[j];
        for (std::size_t i = 0; i < m_; ++i) x[perm_[i]] = w[i];
        return x;
    }

    const StandardForm<Rational>& sf_;
    std::vector<std::size_t> basis_;
    std::size_t m_;
    std::vector<double> dense_;
    bool factored_ = false;
    bool singular_ = false;
    std::vector<Rational> lu_;
    std::vector<std::size_t> perm_;
};

Rational column_dot(const std::vector<std::pair<std::size_t, Rational>>& col, const std::vector<Rational>& y) {
    Rational s(0);
    for (const auto& [r, v] : col) s += v * y[r];
    return s;
}

std::optional<LpOutcome<Rational>> certify(const LpProblem<Rational>& problem, const StandardForm<Rational>& sf,
                                           const TableauResult& tr) {
    const std::size_t m = sf.m(), n = sf.n();
    ExactBasis basis(sf, tr.basis);
    if (tr.status == LpStatus::Infeasible) {
        std::vector<Rational> c1(m);
        for (std::size_t i = 0; i < m; ++i) c1[i] = tr.basis[i] >= n ? Rational(-1) : Rational(0);
        std::vector<Rational> y = basis.solve(c1, true);
        for (auto& v : y) v = -v;  // Farkas direction
        Rational zb(0);
        for (std::size_t i = 0; i < m; ++i) zb += y[i] * sf.b[i];
        if (sgn(zb) <= 0) return std::nullopt;
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(column_dot(sf.cols[k], y)) > 0) return std::nullopt;
        return assemble(problem, sf, LpStatus::Infeasible, {}, y, {});
    }
    std::vector<Rational> xb = basis.solve(sf.b, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(xb[i]) < 0) return std::nullopt;
        if (tr.basis[i] >= n && sgn(xb[i]) != 0) return std::nullopt;
    }
    std::vector<Rational> x = expand_basic(tr.basis, xb, n);
    if (tr.status == LpStatus::Unbounded) {
        std::vector<Rational> aq(m, Rational(0));
        for (const auto& [r, v] : sf.cols[tr.entering]) aq[r] += v;
        std::vector<Rational> d = basis.solve(aq, false);
        std::vector<Rational> ray(n, Rational(0));
        ray[tr.entering] = 1;
        Rational gain = sf.cost[tr.entering];
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(d[i]) > 0) return std::nullopt;
            if (tr.basis[i] >= n) {
                if (sgn(d[i]) != 0) return std::nullopt;
                continue;
            }
            ray[tr.basis[i]] = -d[i];
            gain -= sf.cost[tr.basis[i]] * d[i];
        }
        if (sgn(gain) <= 0) return std::nullopt;
        return assemble(problem, sf, LpStatus::Unbounded, x, {}, ray);
    }
    std::vector<Rational> cb(m);
    for (std::size_t i = 0; i < m; ++i) cb[i] = tr.basis[i] < n ? sf.cost[tr.basis[i]] : Rational(0);
    std::vector<Rational> y = basis.solve(cb, true);
    for (std::size_t k = 0; k < n; ++k)
        if (sgn(sf.cost[k] - column_dot(sf.cols[k], y)) > 0) return std::nullopt;
    return assemble(problem, sf, LpStatus::Optimal, x, y, {});
}

LpOutcome<Rational> exact_simplex(const LpProblem<Rational>& problem, const StandardForm<Rational>& sf,
                                  const SolveOptions& options) {
    Tableau<Rational> tab(sf, true, options.max_pivots);
    TableauResult tr = tab.run(sf.cost);
    LpOutcome<Rational> out;
    if (tr.status == LpStatus::Infeasible) {
        auto y = tab.phase1_duals();
        for (auto& v : y) v = -v;
        out = assemble(problem, sf, LpStatus::Infeasible, {}, y, {});
    } else if (tr.status == LpStatus::Unbounded) {
        auto x = expand_basic(tr.basis, tab.basic_values(), sf.n());
        std::vector<Rational> ray(sf.n(), Rational(0));
        ray[tr.entering] = 1;
        auto col = tab.column(tr.entering);
        for (std::size_t i = 0; i < sf.m(); ++i)
            if (tr.basis[i] < sf.n()) ray[tr.basis[i]] = -col[i];
        out = assemble(problem, sf, LpStatus::Unbounded, x, {}, ray);
    } else {
        auto x = expand_basic(tr.basis, tab.basic_values(), sf.n());
        out = assemble(problem, sf, LpStatus::Optimal, x, tab.phase2_duals(), {});
    }
    out.pivots = tr.pivots;
    return out;
}

StandardForm<double> as_double(const StandardForm<Rational>& sf) {
    StandardForm<double> d;
    d.original_rows = sf.original_rows;
    d.row_sign = sf.row_sign;
    for (const auto& col : sf.cols) {
        std::vector<std::pair<std::size_t, double>> c;
        for (const auto& [r, v] : col) c.emplace_back(r, v.get_d());
        d.cols.push_back(std::move(c));
    }
    for (const auto& v : sf.cost) d.cost.push_back(v.get_d());
    for (const auto& v : sf.b) d.b.push_back(v.get_d());
    return d;
}

// Accurate double re-solve of a basis (tableau values drift over many pivots).
struct DoubleBasis {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    Eigen::PartialPivLU<Eigen::MatrixXd> lut;
    DoubleBasis(const StandardForm<double>& sf, const std::vector<std::size_t>& basis) {
        const auto m = static_cast<Eigen::Index>(sf.m());
        Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index c = 0; c < m; ++c) {
            const std::size_t k = basis[static_cast<std::size_t>(c)];
            if (k < sf.n()) {
                for (const auto& [r, v] : sf.cols[k]) mat(static_cast<Eigen::Index>(r), c) += v;
            } else {
                mat(static_cast<Eigen::Index>(k - sf.n()), c) = 1.0;
            }
        }
        lu.compute(mat);
        lut.compute(mat.transpose());
    }
    static std::vector<double> to_vec(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }
    static Eigen::VectorXd from_vec(const std::vector<double>& v) {
        return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    }
};

}  // namespace

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal:
            return "optimal";
        case LpStatus::Infeasible:
            return "infeasible";
        case LpStatus::Unbounded:
            break;
    }
    return "unbounded";
}

template <typename T>
void LpProblem<T>::validate() const {
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [r, v] : columns[j].entries) {
            if (r >= rhs.size()) throw DimensionMismatch("column " + std::to_string(j) + " references row " + std::to_string(r));
        }
        if (columns[j].lower && columns[j].upper && *columns[j].upper < *columns[j].lower)
            throw DimensionMismatch("column " + std::to_string(j) + " has upper bound below lower bound");
    }
}

template struct LpProblem<double>;
template struct LpProblem<Rational>;

LpProblem<double> to_double(const LpProblem<Rational>& problem) {
    LpProblem<double> d;
    for (const auto& v : problem.rhs) d.rhs.push_back(v.get_d());
    for (const auto& col : problem.columns) {
        LpColumn<double> c;
        for (const auto& [r, v] : col.entries) c.entries.emplace_back(r, v.get_d());
        c.cost = col.cost.get_d();
        c.lower = col.lower ? std::optional<double>(col.lower->get_d()) : std::nullopt;
        c.upper = col.upper ? std::optional<double>(col.upper->get_d()) : std::nullopt;
        d.columns.push_back(std::move(c));
    }
    return d;
}

LpOutcome<double> solve(const LpProblem<double>& problem, const SolveOptions& options) {
    problem.validate();
    const StandardForm<double> sf = standardize(problem);
    Tableau<double> tab(sf, false, options.max_pivots);
    const TableauResult tr = tab.run(sf.cost);
    const DoubleBasis db(sf, tr.basis);
    const std::size_t m = sf.m(), n = sf.n();
    LpOutcome<double> out;
    if (tr.status == LpStatus::Infeasible) {
        std::vector<double> c1(m);
        for (std::size_t i = 0; i < m; ++i) c1[i] = tr.basis[i] >= n ? -1.0 : 0.0;
        auto y = DoubleBasis::to_vec(db.lut.solve(DoubleBasis::from_vec(c1)));
        for (auto& v : y) v = -v;
        out = assemble(problem, sf, LpStatus::Infeasible, {}, y, {});
    } else {
        auto xb = DoubleBasis::to_vec(db.lu.solve(DoubleBasis::from_vec(sf.b)));
        double most_negative = 0.0;
        for (auto& v : xb) {
            most_negative = std::min(most_negative, v);
            v = std::max(v, 0.0);
        }
        auto x = expand_basic(tr.basis, xb, n);
        if (tr.status == LpStatus::Unbounded) {
            std::vector<double> aq(m, 0.0);
            for (const auto& [r, v] : sf.cols[tr.entering]) aq[r] += v;
            auto d = DoubleBasis::to_vec(db.lu.solve(DoubleBasis::from_vec(aq)));
            std::vector<double> ray(n, 0.0);
            ray[tr.entering] = 1.0;
            for (std::size_t i = 0; i < m; ++i)
                if (tr.basis[i] < n) ray[tr.basis[i]] = -d[i];
            out = assemble(problem, sf, LpStatus::Unbounded, x, {}, ray);
        } else {
            std::vector<double> cb(m);
            for (std::size_t i = 0; i < m; ++i) cb[i] = tr.basis[i] < n ? sf.cost[tr.basis[i]] : 0.0;
            auto y = DoubleBasis::to_vec(db.lut.solve(DoubleBasis::from_vec(cb)));
            out = assemble(problem, sf, LpStatus::Optimal, x, y, {});
        }
        double residual = 0.0;
        std::vector<double> ax(problem.rows(), 0.0);
        for (std::size_t j = 0; j < problem.columns.size(); ++j)
            for (const auto& [r, v] : problem.columns[j].entries) ax[r] += v * out.primal[j];
        for (std::size_t i = 0; i < problem.rows(); ++i) residual = std::max(residual, std::abs(ax[i] - problem.rhs[i]));
        if (residual > 1e-9) {
            std::ostringstream msg;
            msg << "primal residual " << std::scientific << residual << " exceeds 1e-9 (most negative basic value "
                << most_negative << ")";
            throw NumericalBreakdown(msg.str());
        }
    }
    out.pivots = tr.pivots;
    return out;
}

LpOutcome<Rational> solve(const LpProblem<Rational>& problem, const SolveOptions& options) {
    problem.validate();
    const StandardForm<Rational> sf = standardize(problem);
    if (!options.exact_pivoting) {
        const StandardForm<double> sfd = as_double(sf);
        std::optional<TableauResult> tr;
        try {
            Tableau<double> tab(sfd, false, options.max_pivots);
            tr = tab.run(sfd.cost);
        } catch (const NumericalBreakdown&) {
        }
        if (tr) {
            if (auto out = certify(problem, sf, *tr)) {
                out->pivots = tr->pivots;
                out->certified_basis = true;
                return *out;
            }
        }
    }
    return exact_simplex(problem, sf, options);
}

namespace {

template <typename T>
std::string check_impl(const LpProblem<T>& problem, const LpOutcome<T>& outcome, double tol) {
    auto lt = [&](const T& a, const T& b) { return to_double(T(b - a)) > tol && a < b; };
    auto neq = [&](const T& a, const T& b) { return std::abs(to_double(T(a - b))) > tol; };
    const std::size_t n = problem.columns.size();
    auto feasible = [&](const std::vector<T>& x) -> std::string {
        if (x.size() != n) return "primal has wrong length";
        std::vector<T> ax(problem.rows(), T(0));
        for (std::size_t j = 0; j < n; ++j) {
            const auto& col = problem.columns[j];
            if (col.lower && lt(x[j], *col.lower)) return "variable " + std::to_string(j) + " below its lower bound";
            if (col.upper && lt(*col.upper, x[j])) return "variable " + std::to_string(j) + " above its upper bound";
            for (const auto& [r, v] : col.entries) ax[r] += v * x[j];
        }
        for (std::size_t i = 0; i < problem.rows(); ++i)
            if (neq(ax[i], problem.rhs[i])) return "row " + std::to_string(i) + " not satisfied";
        return {};
    };
    auto dot = [&](std::size_t j, const std::vector<T>& y) {
        T s(0);
        for (const auto& [r, v] : problem.columns[j].entries) s += v * y[r];
        return s;
    };
    switch (outcome.status) {
        case LpStatus::Optimal: {
            if (auto e = feasible(outcome.primal); !e.empty()) return e;
            T value(0);
            for (std::size_t j = 0; j < n; ++j) value += problem.columns[j].cost * outcome.primal[j];
            if (neq(value, outcome.value)) return "reported value differs from c.x";
            if (outcome.dual.size() != problem.rows()) return "dual has wrong length";
            for (std::size_t j = 0; j < n; ++j) {
                const auto& col = problem.columns[j];
                const T d = col.cost - dot(j, outcome.dual);
                if (to_double(d) > tol && !(col.upper && !neq(outcome.primal[j], *col.upper)))
                    return "reduced cost of variable " + std::to_string(j) + " positive off its upper bound";
                if (to_double(d) < -tol && !(col.lower && !neq(outcome.primal[j], *col.lower)))
                    return "reduced cost of variable " + std::to_string(j) + " negative off its lower bound";
            }
            return {};
        }
        case LpStatus::Infeasible: {
            if (outcome.dual.size() != problem.rows()) return "Farkas vector has wrong length";
            T zb(0);
            for (std::size_t i = 0; i < problem.rows(); ++i) zb += outcome.dual[i] * problem.rhs[i];
            T reach(0);
            for (std::size_t j = 0; j < n; ++j) {
                const auto& col = problem.columns[j];
                const T za = dot(j, outcome.dual);
                if (to_double(za) > tol) {
                    if (!col.upper) return "Farkas combination unbounded above on variable " + std::to_string(j);
                    reach += za * (*col.upper);
                } else if (to_double(za) < -tol) {
                    if (!col.lower) return "Farkas combination unbounded below on variable " + std::to_string(j);
                    reach += za * (*col.lower);
                }
            }
            if (!(to_double(T(zb - reach)) > tol && reach < zb)) return "Farkas vector does not separate";
            return {};
        }
        case LpStatus::Unbounded: {
            if (auto e = feasible(outcome.primal); !e.empty()) return e;
            if (outcome.ray.size() != n) return "ray has wrong length";
            std::vector<T> ad(problem.rows(), T(0));
            T gain(0);
            for (std::size_t j = 0; j < n; ++j) {
                const auto& col = problem.columns[j];
                if (col.lower && to_double(outcome.ray[j]) < -tol) return "ray leaves a lower bound";
                if (col.upper && to_double(outcome.ray[j]) > tol) return "ray leaves an upper bound";
                for (const auto& [r, v] : col.entries) ad[r] += v * outcome.ray[j];
                gain += col.cost * outcome.ray[j];
            }
            for (std::size_t i = 0; i < problem.rows(); ++i)
                if (neq(ad[i], T(0))) return "ray violates row " + std::to_string(i);
            if (!(to_double(gain) > tol && T(0) < gain)) return "ray does not improve the objective";
            return {};
        }
    }
    return "unknown status";
}

}  // namespace

std::string check_outcome(const LpProblem<Rational>& problem, const LpOutcome<Rational>& outcome) {
    return check_impl(problem, outcome, 0.0);
}

std::string check_outcome(const LpProblem<double>& problem, const LpOutcome<double>& outcome, double tolerance) {
    return check_impl(problem, outcome, tolerance);
}

}  // namespace trinl
