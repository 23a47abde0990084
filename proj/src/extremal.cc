// Copyright 2026 The qutrit-ent Authors
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


#include "qutrit_ent/extremal.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <thread>
#include <tuple>

#include "qutrit_ent/measure.h"
#include "qutrit_ent/patterns.h"

namespace qutrit_ent {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kPi = std::numbers::pi;
constexpr double kZeroMeasure = 1e-9;
constexpr int kMaxIterations = 20000;
constexpr int kMaxHalvings = 60;
constexpr double kInitialStep = 0.5;
constexpr int kNewtonIterations = 300;

// Base-3 entropy of the Schmidt spectrum of m, and optionally
// H = dS/d(conj M) = U diag(-sigma (ln sigma^2 + 1) / ln 3) V^dagger.
double entropy_with_gradient(const Mat3 &m, Mat3 *h, std::array<double, 3> *sq) {
    Eigen::JacobiSVD<Mat3> svd(m, h ? (Eigen::ComputeFullU | Eigen::ComputeFullV) : 0);
    const double ln3 = std::log(3.0);
    double s = 0;
    Eigen::Vector3d g;
    for (int i = 0; i < 3; i++) {
        double sigma = svd.singularValues()(i);
        double lambda = sigma * sigma;
        if (sq) {
            (*sq)[i] = lambda;
        }
        if (lambda > 1e-300) {
            s -= lambda * std::log(lambda);
            g(i) = -sigma * (std::log(lambda) + 1);
        } else {
            g(i) = 0;
        }
    }
    if (h) {
        *h = svd.matrixU() * g.asDiagonal() * svd.matrixV().adjoint() / ln3;
    }
    return s / ln3;
}

struct Frame {
    std::vector<BasisCell> cells;
    int k = 0;

    explicit Frame(SupportPattern pattern) : cells(pattern.cells()), k(static_cast<int>(cells.size())) {
    }
};

// Complex coordinates: x = (m_0..m_{k-1}, phi_1..phi_{k-1}); phi_0 = 0.
struct Evaluation {
    double entropy = 0;
    VectorXd grad;
};

double phase_at(const Frame &f, const VectorXd &x, int i) {
    return i == 0 ? 0.0 : x(f.k + i - 1);
}

Mat3 complex_matrix(const Frame &f, const VectorXd &x) {
    double norm = x.head(f.k).norm();
    Mat3 m = Mat3::Zero();
    for (int i = 0; i < f.k; i++) {
        m(f.cells[i].row, f.cells[i].col) = std::polar(x(i) / norm, phase_at(f, x, i));
    }
    return m;
}

Evaluation evaluate_complex(const Frame &f, const VectorXd &x, bool with_grad = true) {
    Evaluation e;
    Mat3 h;
    e.entropy = entropy_with_gradient(complex_matrix(f, x), with_grad ? &h : nullptr, nullptr);
    if (!with_grad) {
        return e;
    }
    double norm = x.head(f.k).norm();
    VectorXd mu = x.head(f.k) / norm;
    e.grad = VectorXd::Zero(2 * f.k - 1);
    VectorXd gm(f.k);
    for (int i = 0; i < f.k; i++) {
        Complex hi = h(f.cells[i].row, f.cells[i].col);
        Complex rot = std::polar(1.0, phase_at(f, x, i));
        gm(i) = 2 * (std::conj(hi) * rot).real();
        if (i > 0) {
            e.grad(f.k + i - 1) = 2 * (std::conj(hi) * Complex(0, 1) * mu(i) * rot).real();
        }
    }
    gm -= gm.dot(mu) * mu;
    e.grad.head(f.k) = gm / norm;
    return e;
}

// Real section: x = signed real coefficients on the pattern cells.
Evaluation evaluate_real(const Frame &f, const VectorXd &x, bool with_grad = true) {
    Evaluation e;
    double norm = x.norm();
    Mat3 m = Mat3::Zero();
    for (int i = 0; i < f.k; i++) {
        m(f.cells[i].row, f.cells[i].col) = x(i) / norm;
    }
    Mat3 h;
    e.entropy = entropy_with_gradient(m, with_grad ? &h : nullptr, nullptr);
    if (!with_grad) {
        return e;
    }
    VectorXd mu = x / norm;
    VectorXd g(f.k);
    for (int i = 0; i < f.k; i++) {
        g(i) = 2 * h(f.cells[i].row, f.cells[i].col).real();
    }
    g -= g.dot(mu) * mu;
    e.grad = g / norm;
    return e;
}

// Keeps magnitudes positive and unit-normed; sign flips move into the phases.
void normalize_complex(const Frame &f, VectorXd &x) {
    x.head(f.k) /= x.head(f.k).norm();
    if (x(0) < 0) {
        x(0) = -x(0);
        for (int i = 1; i < f.k; i++) {
            x(f.k + i - 1) += kPi;
        }
    }
    for (int i = 1; i < f.k; i++) {
        if (x(i) < 0) {
            x(i) = -x(i);
            x(f.k + i - 1) += kPi;
        }
        x(f.k + i - 1) = wrap_angle(x(f.k + i - 1));
    }
}

void normalize_real(const Frame &, VectorXd &x) {
    x /= x.norm();
}

double min_abs_magnitude(const Frame &f, const VectorXd &x) {
    return x.head(f.k).cwiseAbs().minCoeff() / x.head(f.k).norm();
}

using EvalFn = std::function<Evaluation(const Frame &, const VectorXd &, bool)>;
using NormFn = std::function<void(const Frame &, VectorXd &)>;

enum class RunEnd { Converged, Boundary, ZeroMeasure, Stalled };

// Damped Newton (Levenberg-Marquardt) iteration on the gradient residual.
RunEnd newton_polish(const Frame &f, VectorXd &x, const EvalFn &eval, const NormFn &normalize) {
    const int n = static_cast<int>(x.size());
    double damping = 1e-6;
    Evaluation cur = eval(f, x, true);
    for (int iter = 0; iter < kNewtonIterations; iter++) {
        if (cur.entropy <= kZeroMeasure) {
            return RunEnd::ZeroMeasure;
        }
        if (min_abs_magnitude(f, x) < kBoundaryEpsilon) {
            return RunEnd::Boundary;
        }
        double gnorm = cur.grad.norm();
        if (gnorm < 1e-15) {
            return RunEnd::Converged;
        }
        MatrixXd jac(n, n);
        const double h = 1e-7;
        for (int j = 0; j < n; j++) {
            VectorXd xp = x;
            VectorXd xm = x;
            xp(j) += h;
            xm(j) -= h;
            jac.col(j) = (eval(f, xp, true).grad - eval(f, xm, true).grad) / (2 * h);
        }
        // eta is scale invariant in the magnitudes, so the radial direction is
        // a null direction of the Jacobian; pin it.
        VectorXd radial = VectorXd::Zero(n);
        radial.head(f.k) = x.head(f.k) / x.head(f.k).norm();
        MatrixXd jtj = jac.transpose() * jac + (1.0 + jac.squaredNorm()) * radial * radial.transpose();
        VectorXd jtg = jac.transpose() * cur.grad;
        bool accepted = false;
        VectorXd step;
        while (damping < 1e12) {
            MatrixXd a = jtj;
            a.diagonal().array() += damping;
            step = a.ldlt().solve(-jtg);
            VectorXd trial = x + step;
            normalize(f, trial);
            Evaluation next = eval(f, trial, true);
            if (std::isfinite(next.grad.norm()) && next.grad.norm() < gnorm) {
                x = trial;
                cur = next;
                damping = std::max(damping / 10, 1e-15);
                accepted = true;
                break;
            }
            damping *= 10;
        }
        if (!accepted) {
            return RunEnd::Stalled;
        }
        if (step.norm() < 1e-15) {
            break;
        }
    }
    if (min_abs_magnitude(f, x) < kBoundaryEpsilon) {
        return RunEnd::Boundary;
    }
    return cur.entropy <= kZeroMeasure ? RunEnd::ZeroMeasure : RunEnd::Converged;
}

// Projected gradient ascent (sign = +1) or descent (sign = -1) with
// backtracking line search.
RunEnd gradient_run(const Frame &f, VectorXd &x, double sign) {
    Evaluation cur = evaluate_complex(f, x, true);
    for (int iter = 0; iter < kMaxIterations; iter++) {
        if (cur.entropy <= kZeroMeasure) {
            return RunEnd::ZeroMeasure;
        }
        if (min_abs_magnitude(f, x) < kBoundaryEpsilon) {
            return RunEnd::Boundary;
        }
        double g2 = cur.grad.squaredNorm();
        if (g2 < 1e-14) {
            return RunEnd::Converged;
        }
        double t = kInitialStep;
        bool moved = false;
        for (int halving = 0; halving <= kMaxHalvings; halving++, t /= 2) {
            VectorXd trial = x + sign * t * cur.grad;
            normalize_complex(f, trial);
            Evaluation next = evaluate_complex(f, trial, true);
            if (sign * next.entropy >= sign * cur.entropy + 1e-4 * t * g2) {
                x = trial;
                cur = next;
                moved = true;
                break;
            }
        }
        if (!moved) {
            return RunEnd::Converged;
        }
    }
    return RunEnd::Stalled;
}

VectorXd complex_from_real(const Frame &f, const VectorXd &r) {
    VectorXd x(2 * f.k - 1);
    for (int i = 0; i < f.k; i++) {
        x(i) = std::abs(r(i));
        double phase = r(i) < 0 ? kPi : 0.0;
        if (i > 0) {
            x(f.k + i - 1) = phase;
        }
    }
    // Gauge: make the first cell's phase 0.
    if (r(0) < 0) {
        for (int i = 1; i < f.k; i++) {
            x(f.k + i - 1) = wrap_angle(x(f.k + i - 1) + kPi);
        }
    }
    normalize_complex(f, x);
    return x;
}

VectorXd coords_of(const ParamPoint &p) {
    int k = static_cast<int>(p.magnitudes.size());
    VectorXd x(2 * k - 1);
    for (int i = 0; i < k; i++) {
        x(i) = p.magnitudes[i];
        if (i > 0) {
            x(k + i - 1) = p.phases[i];
        }
    }
    return x;
}

ParamPoint params_of(const Frame &f, SupportPattern pattern, const VectorXd &x) {
    ParamPoint p;
    p.pattern = pattern;
    double norm = x.head(f.k).norm();
    for (int i = 0; i < f.k; i++) {
        p.magnitudes.push_back(x(i) / norm);
        p.phases.push_back(i == 0 ? 0.0 : wrap_angle(x(f.k + i - 1)));
    }
    return p;
}

ExtremalResult classify(const Frame &f, SupportPattern pattern, const VectorXd &x, RunEnd end, double tol) {
    ExtremalResult r;
    r.params = params_of(f, pattern, x);
    auto state = state_from_params(r.params);
    r.eta_value = eta(state);
    r.schmidt_sq = schmidt(state).sigma_sq();
    r.cycle_values = cycle_invariants(r.params);
    Evaluation e = evaluate_complex(f, x, true);
    r.grad_residual = e.grad.norm();
    if (end == RunEnd::ZeroMeasure || e.entropy <= kZeroMeasure) {
        r.kind = StationaryKind::ZeroMeasureRegion;
    } else if (end == RunEnd::Boundary || r.params.min_magnitude() < kBoundaryEpsilon) {
        r.kind = StationaryKind::BoundaryEscape;
    } else if (r.grad_residual < tol && r.params.min_magnitude() >= kInteriorMargin) {
        r.kind = StationaryKind::InteriorStationary;
    } else if (r.grad_residual < tol) {
        r.kind = StationaryKind::BoundaryEscape;
    } else {
        r.kind = StationaryKind::BoundaryEscape;
        r.grad_residual = std::max(r.grad_residual, tol);
    }
    return r;
}

// Runs that end neither converged nor outside the interior produce no result.
std::optional<ExtremalResult> finish(const Frame &f, SupportPattern pattern, VectorXd x, RunEnd end, double tol) {
    if (end == RunEnd::Converged || end == RunEnd::Stalled) {
        end = newton_polish(f, x, evaluate_complex, normalize_complex);
    }
    auto r = classify(f, pattern, x, end, tol);
    if (r.kind == StationaryKind::BoundaryEscape && end != RunEnd::Boundary &&
        r.params.min_magnitude() >= kInteriorMargin) {
        return std::nullopt;
    }
    return r;
}

VectorXd random_start(const Frame &f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0, 1);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    VectorXd x(2 * f.k - 1);
    for (int i = 0; i < f.k; i++) {
        x(i) = std::abs(normal(rng)) + 0.05;
    }
    for (int i = 1; i < f.k; i++) {
        x(f.k + i - 1) = angle(rng);
    }
    normalize_complex(f, x);
    return x;
}

std::vector<ExtremalResult> runs_from_start(const Frame &f, SupportPattern pattern, uint64_t seed, double tol) {
    std::vector<ExtremalResult> out;
    VectorXd x0 = random_start(f, seed);
    auto keep = [&](std::optional<ExtremalResult> r) {
        if (r) {
            out.push_back(std::move(*r));
        }
    };
    for (double sign : {+1.0, -1.0}) {
        VectorXd x = x0;
        RunEnd end = gradient_run(f, x, sign);
        keep(finish(f, pattern, x, end, tol));
    }
    {
        VectorXd x = x0;
        RunEnd end = newton_polish(f, x, evaluate_complex, normalize_complex);
        keep(finish(f, pattern, x, end, tol));
    }
    {
        std::mt19937_64 rng(derive_seed(seed, 1));
        std::normal_distribution<double> normal(0, 1);
        VectorXd r(f.k);
        for (int i = 0; i < f.k; i++) {
            r(i) = normal(rng);
        }
        normalize_real(f, r);
        RunEnd end = newton_polish(f, r, evaluate_real, normalize_real);
        VectorXd x = complex_from_real(f, r);
        if (end == RunEnd::Boundary || end == RunEnd::ZeroMeasure) {
            keep(classify(f, pattern, x, end, tol));
        } else {
            keep(finish(f, pattern, x, end, tol));
        }
    }
    return out;
}

int worker_count(int requested, int jobs) {
    int n = requested;
    if (n <= 0) {
        if (const char *env = std::getenv("QUTRIT_ENT_THREADS")) {
            n = std::atoi(env);
        }
    }
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::clamp(n, 1, std::max(1, jobs));
}

double rounded(double v, double q) {
    return std::round(v / q) * q;
}

double rounded_angle(double v, double q) {
    double r = rounded(wrap_angle(v), q);
    if (r >= 2 * kPi - q / 2) {
        r = 0;
    }
    return r;
}

}  // namespace

ParamPoint ParamPoint::make(SupportPattern pattern, std::vector<double> magnitudes, std::vector<double> phases) {
    size_t k = static_cast<size_t>(pattern.size());
    if (magnitudes.size() != k || phases.size() != k) {
        throw std::invalid_argument("ParamPoint needs one magnitude and one phase per pattern cell");
    }
    double norm = 0;
    for (double m : magnitudes) {
        norm += m * m;
    }
    norm = std::sqrt(norm);
    if (!(norm > 0)) {
        throw std::invalid_argument("ParamPoint magnitudes are all zero");
    }
    for (size_t i = 0; i < k; i++) {
        magnitudes[i] /= norm;
        if (magnitudes[i] < 0) {
            magnitudes[i] = -magnitudes[i];
            phases[i] += kPi;
        }
    }
    double gauge = phases[0];
    for (auto &ph : phases) {
        ph = wrap_angle(ph - gauge);
    }
    phases[0] = 0;
    return ParamPoint{pattern, std::move(magnitudes), std::move(phases)};
}

ParamPoint ParamPoint::from_state(const PureState &state, SupportPattern pattern) {
    std::vector<double> mags;
    std::vector<double> phases;
    for (auto c : pattern.cells()) {
        mags.push_back(std::abs(state(c)));
        phases.push_back(std::arg(state(c)));
    }
    return make(pattern, std::move(mags), std::move(phases));
}

double ParamPoint::min_magnitude() const {
    return magnitudes.empty() ? 0.0 : *std::min_element(magnitudes.begin(), magnitudes.end());
}

PureState state_from_params(const ParamPoint &p) {
    auto cells = p.pattern.cells();
    if (cells.size() != p.magnitudes.size() || cells.size() != p.phases.size()) {
        throw std::invalid_argument("ParamPoint does not match its pattern");
    }
    Mat3 m = Mat3::Zero();
    for (size_t i = 0; i < cells.size(); i++) {
        m(cells[i].row, cells[i].col) = std::polar(p.magnitudes[i], p.phases[i]);
    }
    return PureState::from_coefficients(m, true);
}

std::vector<Cycle> cycle_basis(SupportPattern pattern) {
    // Vertices 0..2 are rows, 3..5 are columns.
    std::array<std::vector<std::pair<int, BasisCell>>, 6> tree;
    std::array<int, 6> component{0, 1, 2, 3, 4, 5};
    std::function<int(int)> find = [&](int v) {
        return component[v] == v ? v : component[v] = find(component[v]);
    };
    std::vector<BasisCell> closing;
    for (auto c : pattern.cells()) {
        int a = c.row;
        int b = 3 + c.col;
        if (find(a) == find(b)) {
            closing.push_back(c);
        } else {
            component[find(a)] = find(b);
            tree[a].push_back({b, c});
            tree[b].push_back({a, c});
        }
    }
    std::vector<Cycle> out;
    for (auto c : closing) {
        // Tree path from the column vertex back to the row vertex.
        int start = 3 + c.col;
        int goal = c.row;
        std::array<int, 6> parent;
        std::array<BasisCell, 6> via;
        parent.fill(-1);
        parent[start] = start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, cell] : tree[v]) {
                if (parent[w] == -1) {
                    parent[w] = v;
                    via[w] = cell;
                    stack.push_back(w);
                }
            }
        }
        Cycle cycle;
        cycle.edges.push_back({c, -1});
        int sign = +1;
        for (int v = goal; v != start; v = parent[v]) {
            cycle.edges.push_back({via[v], sign});
            sign = -sign;
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<double> cycle_invariants(const ParamPoint &p) {
    auto cells = p.pattern.cells();
    std::vector<double> out;
    for (const auto &cycle : cycle_basis(p.pattern)) {
        double sum = 0;
        for (auto [cell, sign] : cycle.edges) {
            auto it = std::find(cells.begin(), cells.end(), cell);
            sum += sign * p.phases[static_cast<size_t>(it - cells.begin())];
        }
        out.push_back(wrap_angle(sum));
    }
    return out;
}

double EtaGradient::norm() const {
    double s = 0;
    for (double v : magnitudes) {
        s += v * v;
    }
    for (double v : phases) {
        s += v * v;
    }
    return std::sqrt(s);
}

EtaGradient eta_gradient(const ParamPoint &p) {
    if (p.min_magnitude() <= 1e-9) {
        throw std::invalid_argument("eta_gradient needs every magnitude above 1e-9");
    }
    Frame f(p.pattern);
    VectorXd x = coords_of(p);
    Evaluation e = evaluate_complex(f, x, true);
    if (e.entropy <= kEtaZero) {
        throw ZeroMeasureError("eta is identically zero here (product-state branch)");
    }
    EtaGradient g;
    for (int i = 0; i < f.k; i++) {
        g.magnitudes.push_back(e.grad(i));
        g.phases.push_back(i == 0 ? 0.0 : e.grad(f.k + i - 1));
    }
    return g;
}

std::string format_kind(StationaryKind kind) {
    switch (kind) {
        case StationaryKind::InteriorStationary:
            return "interior_stationary";
        case StationaryKind::BoundaryEscape:
            return "boundary_escape";
        case StationaryKind::ZeroMeasureRegion:
            return "zero_measure_region";
    }
    return "unknown";
}

ExtremalResult refine_stationary(const ParamPoint &start, double tol) {
    Frame f(start.pattern);
    VectorXd x = coords_of(start);
    normalize_complex(f, x);
    if (forced_separable(start.pattern)) {
        return classify(f, start.pattern, x, RunEnd::ZeroMeasure, tol);
    }
    RunEnd end = newton_polish(f, x, evaluate_complex, normalize_complex);
    return classify(f, start.pattern, x, end, tol);
}

std::vector<ExtremalResult> stationary_runs(SupportPattern pattern, const StationaryOptions &options) {
    if (options.starts < 1) {
        throw std::invalid_argument("find_stationary needs at least one start");
    }
    if (pattern.size() == 0) {
        throw std::invalid_argument("find_stationary needs a nonempty pattern");
    }
    Frame f(pattern);
    std::vector<std::vector<ExtremalResult>> per_start(static_cast<size_t>(options.starts));
    if (forced_separable(pattern)) {
        for (int s = 0; s < options.starts; s++) {
            VectorXd x = random_start(f, derive_seed(options.seed, static_cast<uint64_t>(s)));
            per_start[s].push_back(classify(f, pattern, x, RunEnd::ZeroMeasure, options.tol));
        }
    } else {
        int workers = worker_count(options.threads, options.starts);
        auto work = [&](int w) {
            for (int s = w; s < options.starts; s += workers) {
                per_start[s] = runs_from_start(f, pattern, derive_seed(options.seed, static_cast<uint64_t>(s)), options.tol);
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (int w = 0; w < workers; w++) {
                pool.emplace_back(work, w);
            }
        }
    }
    std::vector<ExtremalResult> out;
    for (auto &v : per_start) {
        for (auto &r : v) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<ExtremalResult> dedup_results(std::vector<ExtremalResult> runs) {
    using Key = std::tuple<int, double, std::array<double, 3>, std::vector<double>>;
    std::map<Key, ExtremalResult> unique;
    for (auto &r : runs) {
        Key key;
        std::get<0>(key) = static_cast<int>(r.kind);
        std::get<1>(key) = rounded(r.eta_value, 1e-7);
        for (int i = 0; i < 3; i++) {
            std::get<2>(key)[i] = rounded(r.schmidt_sq[i], 1e-7);
        }
        for (double c : r.cycle_values) {
            std::get<3>(key).push_back(rounded_angle(c, 1e-6));
        }
        auto it = unique.find(key);
        if (it == unique.end()) {
            unique.emplace(std::move(key), std::move(r));
        } else if (r.grad_residual < it->second.grad_residual) {
            it->second = std::move(r);
        }
    }
    std::vector<ExtremalResult> out;
    for (auto &[key, r] : unique) {
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const ExtremalResult &a, const ExtremalResult &b) {
        return a.eta_value > b.eta_value;
    });
    return out;
}

std::vector<ExtremalResult> find_stationary(SupportPattern pattern, const StationaryOptions &options) {
    return dedup_results(stationary_runs(pattern, options));
}

InteriorVerdict has_interior_extremum(SupportPattern pattern, int starts, uint64_t seed) {
    InteriorVerdict v;
    v.starts = starts;
    v.seed = seed;
    v.reportable = starts >= 100;
    StationaryOptions opts;
    opts.starts = starts;
    opts.seed = seed;
    auto runs = stationary_runs(pattern, opts);
    std::vector<ExtremalResult> interior;
    for (auto &r : runs) {
        switch (r.kind) {
            case StationaryKind::InteriorStationary:
                if (r.eta_value > 0) {
                    interior.push_back(r);
                }
                break;
            case StationaryKind::BoundaryEscape:
                v.boundary_escapes++;
                break;
            case StationaryKind::ZeroMeasureRegion:
                v.zero_measure++;
                break;
        }
    }
    v.interior = dedup_results(std::move(interior));
    v.found = !v.interior.empty();
    return v;
}

}  // namespace qutrit_ent
