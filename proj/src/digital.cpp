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

#include "holosec/digital.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace holosec {

Majorizer majorizer_coefficient(double anchor_sinr)
{
    const double xt = std::max(0.0, anchor_sinr);
    return {1.0 / (1.0 + xt), std::log1p(xt) - xt / (1.0 + xt)};
}

SurrogateQuadratic surrogate_matrix_v(const CVector& channel, const CMatrix& W,
                                      const CVector& anchor, const CVector& z, double noise_power)
{
    const CVector eff = W.adjoint() * channel; // W^H c
    SurrogateQuadratic s;
    s.anchor = anchor;
    s.b = std::norm(eff.dot(z)) + noise_power;
    const double quad = std::norm(eff.dot(anchor)); // v_t^H A v_t
    s.anchor_sinr = quad / s.b;
    s.constant = std::log2(1.0 + s.anchor_sinr);
    s.matrix = (eff * eff.adjoint()) / (s.b + quad);
    return s;
}

CMatrix build_Qv(const SurrogateQuadratic& bob, const SurrogateQuadratic& eve)
{
    if (bob.matrix.rows() != eve.matrix.rows() || bob.matrix.cols() != eve.matrix.cols())
        throw std::invalid_argument("build_Qv: surrogate dimensions differ");
    const CMatrix d = bob.matrix - eve.matrix;
    return 0.5 * (d + d.adjoint());
}

GeneralizedEigen solve_generalized_eig(const CMatrix& Q, const CMatrix& Reff)
{
    const Eigen::Index n = Q.rows();
    if (Q.cols() != n || Reff.rows() != n || Reff.cols() != n)
        throw std::invalid_argument("solve_generalized_eig: dimension mismatch");

    GeneralizedEigen out;
    const double tr = Reff.trace().real();
    out.ridge = tr > 0.0 ? 1e-10 * tr / static_cast<double>(n) : 1e-10;
    CMatrix B = 0.5 * (Reff + Reff.adjoint());
    B.diagonal().array() += out.ridge;
    const CMatrix Qh = 0.5 * (Q + Q.adjoint());

    auto fail = [&](const char* what) {
        return NumericalError(std::string("solve_generalized_eig: ") + what +
                              "; Q=" + dump_matrix(Q) + " Reff=" + dump_matrix(Reff));
    };
    if (Eigen::LLT<CMatrix>(B).info() != Eigen::Success)
        throw fail("Reff + ridge is not positive definite");

    Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(Qh, B,
                                                         Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (es.info() != Eigen::Success)
        throw fail("eigendecomposition did not converge");

    // Eigenvalues come back ascending.
    out.value = es.eigenvalues()[n - 1];
    CVector v = es.eigenvectors().col(n - 1);
    // Re-normalize against B explicitly; the solver's normalization is only
    // as good as its Cholesky factor.
    const double bnorm = std::sqrt(std::max(0.0, v.dot(B * v).real()));
    if (!(bnorm > 0.0) || !v.allFinite())
        throw fail("degenerate eigenvector");
    v /= bnorm;

    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    v *= std::conj(v[imax]) / std::abs(v[imax]);
    v[imax] = std::abs(v[imax]);

    out.vector = v;
    out.residual = (Qh * v - out.value * (B * v)).norm();
    return out;
}

CVector power_scale(const CVector& v, const CMatrix& W, double available_power)
{
    const double budget = std::max(0.0, available_power);
    const double used = (W * v).squaredNorm();
    if (budget == 0.0)
        return CVector::Zero(v.size());
    if (!(used > 0.0))
        return v;
    const double beta = std::min(1.0, std::sqrt(budget / used));
    return beta * v;
}

DigitalStep digital_step(const BeamformingState& state, const ChannelRealization& channels,
                         const CMatrix& W, const ValidatedConfig& config)
{
    const auto bob = surrogate_matrix_v(channels.h_b, W, state.v, state.z, config.noise_bob);
    const auto eve = surrogate_matrix_v(channels.g_e, W, state.v, state.z, config.noise_eve);

    DigitalStep step;
    step.Qv = build_Qv(bob, eve);
    const CMatrix Reff = W.adjoint() * W;
    step.eig = solve_generalized_eig(step.Qv, Reff);

    CMatrix B = Reff;
    B.diagonal().array() += step.eig.ridge;
    const double denom = state.v.dot(B * state.v).real();
    step.anchor_quotient = denom > 0.0 ? state.v.dot(step.Qv * state.v).real() / denom : 0.0;

    step.budget = signal_budget(config, state.z);
    step.v = power_scale(step.eig.vector, W, step.budget);
    return step;
}

} // namespace holosec
