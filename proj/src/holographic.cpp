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

#include "holosec/holographic.hpp"

#include <cmath>
#include <stdexcept>

namespace holosec {

CMatrix quadratic_form_matrix(const CVector& channel, const CMatrix& phi, const CVector& x)
{
    if (phi.rows() != channel.size() || phi.cols() != x.size())
        throw std::invalid_argument("quadratic_form_matrix: dimension mismatch");
    // diag(p)^H c c^H diag(p) = u u^H with u = conj(p) .* c
    const CVector u = (phi * x).conjugate().cwiseProduct(channel);
    return u * u.adjoint();
}

namespace {

// u = conj(phi x) .* c, so that |c^H diag(w) phi x|^2 = |w^T u|^2 = w^T Re(u u^H) w.
CVector form_vector(const CVector& channel, const CMatrix& phi, const CVector& x)
{
    return (phi * x).conjugate().cwiseProduct(channel);
}

double form_value(const CVector& u, const RVector& w)
{
    return std::norm(w.cast<cplx>().dot(u));
}

} // namespace

HolographicSurrogate surrogate_Qw(const HolographicContext& ctx, const RVector& anchor)
{
    const CVector ub = form_vector(ctx.h_b, ctx.phi, ctx.v);
    const CVector ue = form_vector(ctx.g_e, ctx.phi, ctx.v);

    HolographicSurrogate s;
    s.anchor = anchor;
    s.denom_bob = form_value(form_vector(ctx.h_b, ctx.phi, ctx.z), anchor) + ctx.noise_bob;
    s.denom_eve = form_value(form_vector(ctx.g_e, ctx.phi, ctx.z), anchor) + ctx.noise_eve;
    s.sinr_bob = form_value(ub, anchor) / s.denom_bob;
    s.sinr_eve = form_value(ue, anchor) / s.denom_eve;

    const double cb = 1.0 / (s.denom_bob * (1.0 + s.sinr_bob));
    const double ce = 1.0 / (s.denom_eve * (1.0 + s.sinr_eve));

    // Q = cb Re(ub ub^H) - ce Re(ue ue^H), written as one rank-4 product.
    const Eigen::Index M = anchor.size();
    RMatrix U(M, 4), V(M, 4);
    U << ub.real(), ub.imag(), ue.real(), ue.imag();
    V.leftCols(2) = cb * U.leftCols(2);
    V.rightCols(2) = -ce * U.rightCols(2);
    s.Q.noalias() = U * V.transpose(); // symmetric by construction
    return s;
}

RVector gradient(const RMatrix& Q, const RVector& w)
{
    return 2.0 * (Q * w);
}

RVector project_box(const RVector& w)
{
    return w.cwiseMax(0.0).cwiseMin(1.0);
}

HolographicResult optimize_holographic(const RVector& w_init, const HolographicContext& ctx,
                                       const HolographicOptions& opts)
{
    HolographicResult out;
    out.w = project_box(w_init);
    for (int t = 0; t < opts.max_iters; ++t) {
        const HolographicSurrogate s = surrogate_Qw(ctx, out.w);
        const RVector grad = gradient(s.Q, out.w);
        const double current = s.value(out.w);

        double step = opts.learning_rate;
        bool accepted = false;
        RVector next;
        for (int h = 0; h <= opts.max_halvings; ++h) {
            next = project_box(out.w + step * grad);
            if (s.value(next) >= current - 1e-12) {
                accepted = true;
                break;
            }
            step *= 0.5;
            ++out.halvings;
        }
        if (!accepted) {
            out.converged = true;
            break;
        }
        const double moved = (next - out.w).norm();
        out.w = next;
        out.iterations = t + 1;
        if (moved < opts.tolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

} // namespace holosec
