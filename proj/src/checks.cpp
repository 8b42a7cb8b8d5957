// SPDX-License-Identifier: Apache-2.0
//
// holosec - secrecy-rate optimization for holographic-surface downlinks
// Copyright (C) 2026 The holosec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "holosec/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <utility>

#include "holosec/artificial_noise.hpp"
#include "holosec/digital.hpp"
#include "holosec/experiment.hpp"
#include "holosec/holographic.hpp"
#include "holosec/optimizer.hpp"

namespace holosec {

namespace {

using Gen = std::mt19937_64;

CVector random_cvec(Eigen::Index n, Gen& g, double scale = 1.0)
{
    std::normal_distribution<double> d(0.0, std::sqrt(0.5) * scale);
    CVector v(n);
    for (auto& x : v)
        x = cplx(d(g), d(g));
    return v;
}

CMatrix random_cmat(Eigen::Index r, Eigen::Index c, Gen& g)
{
    CMatrix m(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        m.col(j) = random_cvec(r, g);
    return m;
}

RVector random_box(Eigen::Index n, Gen& g)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RVector w(n);
    for (auto& x : w)
        x = u(g);
    return w;
}

CMatrix random_phases(Eigen::Index M, Eigen::Index R, Gen& g)
{
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    CMatrix p(M, R);
    for (Eigen::Index i = 0; i < M; ++i)
        for (Eigen::Index k = 0; k < R; ++k)
            p(i, k) = std::polar(1.0, u(g));
    return p;
}

std::string fmt(const char* f, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

CheckResult majorizer_bound(Gen& g)
{
    std::uniform_real_distribution<double> u(0.0, 1e3);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = u(g), xt = u(g);
        const auto mj = majorizer_coefficient(xt);
        worst = std::min(worst, mj.bound(x) - std::log1p(x));
        worst = std::min(worst, -std::abs(mj.bound(xt) - std::log1p(xt)));
    }
    return {"majorizer bound", worst >= -1e-12, fmt("worst slack %.3g", worst)};
}

CheckResult quadratic_form(Gen& g)
{
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int M = 4 + static_cast<int>(g() % 13), R = 1 + static_cast<int>(g() % 4);
        const CVector h = random_cvec(M, g);
        const CMatrix phi = random_phases(M, R, g);
        const CVector v = random_cvec(R, g);
        const RVector w = random_box(M, g);
        const RMatrix A = quadratic_form_matrix(h, phi, v).real();
        cplx direct = 0.0;
        for (int m = 0; m < M; ++m) {
            cplx px = 0.0;
            for (int k = 0; k < R; ++k)
                px += phi(m, k) * v[k];
            direct += std::conj(h[m]) * w[m] * px;
        }
        const double ref = std::norm(direct);
        worst = std::max(worst, std::abs(w.dot(A * w) - ref) / ref);
    }
    return {"quadratic form identity", worst <= 1e-10, fmt("worst relative error %.3g", worst)};
}

CheckResult generalized_eig(Gen& g)
{
    bool ok = true;
    double worst_res = 0.0;
    for (int i = 0; i < 50 && ok; ++i) {
        const int R = 1 + static_cast<int>(g() % 8);
        const CMatrix X = random_cmat(R, R, g);
        const CMatrix Q = X + X.adjoint();
        const CMatrix Y = random_cmat(R, R + 2, g);
        const CMatrix B = Y * Y.adjoint();
        const auto e = solve_generalized_eig(Q, B);
        worst_res = std::max(worst_res, e.residual / Q.norm());
        CMatrix Br = B;
        Br.diagonal().array() += e.ridge;
        for (int k = 0; k < 2000; ++k) {
            const CVector u = random_cvec(R, g);
            const double q = u.dot(Q * u).real() / u.dot(Br * u).real();
            if (q > e.value + 1e-10 * std::abs(e.value) + 1e-12) {
                ok = false;
                break;
            }
        }
    }
    ok = ok && worst_res <= 1e-8;
    return {"generalized eigenvector optimality", ok, fmt("worst residual %.3g", worst_res)};
}

CheckResult an_contracts(Gen& g)
{
    double leak = 0.0, power = 0.0, gain = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int R = 2 + static_cast<int>(g() % 3);
        const CMatrix W = random_cmat(16, R, g);
        const CVector h = random_cvec(16, g), ge = random_cvec(16, g);
        const double P = 0.1 + random_box(1, g)[0];
        const auto nb = null_space(effective_bob_channel(W, h));
        const auto d = design_an(nb, W, ge, P);
        const CVector c = W.adjoint() * ge;
        const double lam = (nb.basis.adjoint() * c).squaredNorm();
        leak = std::max(leak, std::abs(h.dot(W * d.z)) / (h.norm() * (W * d.z).norm()));
        power = std::max(power, std::abs(d.z.squaredNorm() - P) / P);
        gain = std::max(gain, std::abs(std::norm(ge.dot(W * d.z)) - P * lam) / (P * lam));
    }
    const bool ok = leak <= 1e-9 && power <= 1e-12 && gain <= 1e-9;
    return {"artificial noise contracts", ok,
            fmt("worst leakage %.3g, worst power error %.3g", leak, power)};
}

CheckResult holographic_gradient(Gen& g)
{
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int M = 9, R = 2;
        HolographicContext c{random_cvec(M, g), random_cvec(M, g), random_phases(M, R, g),
                             random_cvec(R, g), random_cvec(R, g, 0.3), 0.5, 0.5};
        const RVector w = random_box(M, g);
        const auto s = surrogate_Qw(c, w);
        const RVector grad = gradient(s.Q, w);
        RVector fd(M);
        for (int m = 0; m < M; ++m) {
            RVector up = w, dn = w;
            up[m] += 1e-6;
            dn[m] -= 1e-6;
            fd[m] = (s.value(up) - s.value(dn)) / 2e-6;
        }
        worst = std::max(worst, (grad - fd).norm() / grad.norm());
    }
    return {"holographic gradient", worst <= 1e-5, fmt("worst relative error %.3g", worst)};
}

CheckResult projection(Gen& g)
{
    std::uniform_real_distribution<double> u(-2.0, 3.0);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        RVector a(8), b(8);
        for (int m = 0; m < 8; ++m) {
            a[m] = u(g);
            b[m] = u(g);
        }
        const RVector pa = project_box(a);
        ok = ok && (pa - project_box(b)).norm() <= (a - b).norm() + 1e-15;
        ok = ok && pa.minCoeff() >= 0.0 && pa.maxCoeff() <= 1.0 && project_box(pa) == pa;
    }
    return {"box projection", ok, "non-expansive and idempotent"};
}

CheckResult optimizer_feasibility(std::uint64_t seed)
{
    SystemConfig c;
    c.num_elements = 16;
    c.max_outer_iters = 20;
    const auto cfg = validate(c);
    const auto geo = make_geometry(cfg);
    double worst_power = 0.0;
    bool box = true;
    for (int i = 0; i < 5; ++i) {
        const auto ch = draw_channels(cfg, geo, seed + static_cast<std::uint64_t>(i));
        Rng rng(seed + 100 + static_cast<std::uint64_t>(i));
        optimize(cfg, geo, ch, initialize(cfg, geo, ch, rng),
                 [&](const BeamformingState& s, const IterationRecord& r) {
                     worst_power = std::max(worst_power,
                                            (r.power_signal + r.power_an) / cfg.transmit_power);
                     box = box && s.w.minCoeff() >= 0.0 && s.w.maxCoeff() <= 1.0;
                 });
    }
    const bool ok = box && worst_power <= 1.0 + 1e-9;
    return {"optimizer feasibility", ok, fmt("peak power / budget %.12g", worst_power)};
}

CheckResult sweep_determinism(std::uint64_t seed)
{
    SweepSpec s;
    s.variable = SweepVariable::TransmitPowerDbm;
    s.values = {10.0, 20.0};
    s.trials = 2;
    s.base.num_elements = 9;
    s.base.max_outer_iters = 10;
    s.seed = seed;
    s.threads = 1;
    const std::string a = format_csv(run_sweep(s));
    s.threads = 2;
    const std::string b = format_csv(run_sweep(s));
    return {"sweep determinism", a == b, "serial and threaded CSV compared byte by byte"};
}

} // namespace

std::vector<CheckResult> run_property_checks(std::uint64_t seed)
{
    Gen g(seed);
    using Check = std::pair<const char*, std::function<CheckResult()>>;
    const std::vector<Check> checks{
        {"majorizer bound", [&] { return majorizer_bound(g); }},
        {"quadratic form identity", [&] { return quadratic_form(g); }},
        {"generalized eigenvector optimality", [&] { return generalized_eig(g); }},
        {"artificial noise contracts", [&] { return an_contracts(g); }},
        {"holographic gradient", [&] { return holographic_gradient(g); }},
        {"box projection", [&] { return projection(g); }},
        {"optimizer feasibility", [&] { return optimizer_feasibility(seed); }},
        {"sweep determinism", [&] { return sweep_determinism(seed); }},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, check] : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = {name, false, std::string("threw: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace holosec
