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

#include <doctest.h>

#include <cmath>

#include "holosec/artificial_noise.hpp"
#include "holosec/metrics.hpp"
#include "oracles.hpp"

using namespace holosec;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

TEST_CASE("sinr edge cases")
{
    oracle::Gen g(1);
    const CMatrix W = oracle::random_cmat(9, 2, g);
    const CVector h = oracle::random_cvec(9, g);
    const CVector z = oracle::random_cvec(2, g);
    CHECK(sinr_bob(h, W, CVector::Zero(2), z, 1e-3) == 0.0);
    CHECK(sinr_eve(h, W, CVector::Zero(2), z, 1e-3) == 0.0);

    // |h^H W v|^2 equal to the noise power with z = 0 gives exactly one.
    const CVector v = oracle::random_cvec(2, g);
    const double sig = std::norm((W.adjoint() * h).dot(v));
    CHECK(sinr_bob(h, W, v, CVector::Zero(2), sig) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("AN in Eve's null space is invisible to her")
{
    oracle::Gen g(2);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix W = oracle::random_cmat(16, 3, g);
        const CVector ge = oracle::random_cvec(16, g);
        const CVector v = oracle::random_cvec(3, g);
        const auto nb = null_space(W.adjoint() * ge);
        const CVector z = nb.basis * oracle::random_cvec(2, g);
        const double with = sinr_eve(ge, W, v, z, 0.1);
        const double without = sinr_eve(ge, W, v, CVector::Zero(3), 0.1);
        CHECK(rel(with, without) < 1e-12);
    }
}

TEST_CASE("sinr matches the scalar oracle")
{
    oracle::Gen g(3);
    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix W = oracle::random_cmat(16, 4, g);
        const CVector h = oracle::random_cvec(16, g);
        const CVector ge = oracle::random_cvec(16, g, 0.5);
        const CVector v = oracle::random_cvec(4, g);
        const CVector z = oracle::random_cvec(4, g);
        CHECK(rel(sinr_bob(h, W, v, z, 0.3), oracle::sinr(h, W, v, z, 0.3)) < 1e-12);
        CHECK(rel(sinr_eve(ge, W, v, z, 0.7), oracle::sinr(ge, W, v, z, 0.7)) < 1e-12);
    }
}

TEST_CASE("secrecy_rate")
{
    CHECK(secrecy_rate(1.0, 0.0) == 1.0);
    CHECK(secrecy_rate(3.7, 3.7) == 0.0);
    CHECK(secrecy_rate(0.0, 10.0) == 0.0);

    // Nondecreasing in sinr_b, nonincreasing in sinr_e.
    oracle::Gen g(4);
    for (int i = 0; i < 1000; ++i) {
        const RVector x = 10.0 * oracle::random_box(3, g);
        CHECK(secrecy_rate(x[0] + x[2], x[1]) >= secrecy_rate(x[0], x[1]));
        CHECK(secrecy_rate(x[0], x[1] + x[2]) <= secrecy_rate(x[0], x[1]));
    }
}

TEST_CASE("transmit_power")
{
    const auto zero = transmit_power(CMatrix::Identity(4, 2), CVector::Zero(2), CVector::Zero(2));
    CHECK(zero.signal == 0.0);
    CHECK(zero.an == 0.0);

    oracle::Gen g(5);
    const CMatrix Q = Eigen::HouseholderQR<CMatrix>(oracle::random_cmat(6, 6, g)).householderQ();
    const CMatrix W = Q.leftCols(2);
    const CVector v = oracle::random_unit(2, g);
    CHECK(transmit_power(W, v, CVector::Zero(2)).signal == doctest::Approx(1.0).epsilon(1e-14));

    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix Wr = oracle::random_cmat(25, 3, g);
        const CVector vr = oracle::random_cvec(3, g);
        const CVector zr = oracle::random_cvec(3, g);
        const auto p = transmit_power(Wr, vr, zr);
        CHECK(rel(p.signal, oracle::trace_power(Wr, vr)) < 1e-12);
        CHECK(rel(p.an, zr.squaredNorm()) < 1e-15);
    }
}

TEST_CASE("scale laws")
{
    oracle::Gen g(6);
    for (int trial = 0; trial < 100; ++trial) {
        const CMatrix W = oracle::random_cmat(9, 2, g);
        const CVector h = oracle::random_cvec(9, g);
        const CVector ge = oracle::random_cvec(9, g);
        const CVector v = oracle::random_cvec(2, g);
        const CVector z = oracle::random_cvec(2, g);
        const double alpha = 0.1 + 3.0 * oracle::random_box(1, g)[0];

        const double base = std::norm((W.adjoint() * h).dot(v));
        const double scaled = std::norm((W.adjoint() * h).dot(CVector(alpha * v)));
        CHECK(rel(scaled, alpha * alpha * base) < 1e-12);

        const cplx phase = std::polar(1.0, 6.0 * oracle::random_box(1, g)[0]);
        const auto a = evaluate(h, ge, W, v, z, 0.2, 0.4);
        const auto b = evaluate(CVector(phase * h), CVector(phase * ge), W, v, z, 0.2, 0.4);
        CHECK(std::abs(a.secrecy - b.secrecy) < 1e-12);
    }
}

TEST_CASE("evaluate bundles consistent numbers")
{
    oracle::Gen g(7);
    const CMatrix W = oracle::random_cmat(16, 2, g);
    const CVector h = oracle::random_cvec(16, g);
    const CVector ge = oracle::random_cvec(16, g, 0.3);
    const CVector v = oracle::random_cvec(2, g);
    const CVector z = oracle::random_cvec(2, g, 0.1);
    const auto r = evaluate(h, ge, W, v, z, 1.0, 1.0);
    CHECK(r.secrecy == doctest::Approx(std::max(0.0, r.rate_bob - r.rate_eve)));
    CHECK(r.power_total == doctest::Approx(r.power_signal + r.power_an));
    CHECK(r.secrecy == doctest::Approx(oracle::secrecy(h, ge, W, v, z, 1.0, 1.0)).epsilon(1e-12));
}
