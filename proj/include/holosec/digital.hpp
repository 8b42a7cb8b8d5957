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

#pragma once

#include "holosec/channel.hpp"
#include "holosec/config.hpp"
#include "holosec/state.hpp"
#include "holosec/types.hpp"

namespace holosec {

/// Tangent line of ln(1 + x) at x_t: ln(1 + x) <= offset + slope * x for all x >= 0.
struct Majorizer {
    double slope;  // 1 / (1 + x_t)
    double offset; // ln(1 + x_t) - x_t / (1 + x_t)

    double bound(double x) const { return offset + slope * x; }
};

Majorizer majorizer_coefficient(double anchor_sinr);

/// One rate term majorized at an anchor: log2(1 + v^H A v / b) is bounded by
/// `constant + v^H matrix v / ln 2` up to the dropped tangent constant.
struct SurrogateQuadratic {
    CMatrix matrix;      // A / (b + v_t^H A v_t), A = W^H c c^H W
    CVector anchor;      // v_t
    double constant = 0; // log2(1 + x_t)
    double b = 0;        // |c^H W z|^2 + noise, W
    double anchor_sinr = 0; // x_t = v_t^H A v_t / b
};

SurrogateQuadratic surrogate_matrix_v(const CVector& channel, const CMatrix& W,
                                      const CVector& anchor, const CVector& z, double noise_power);

/// Q_v = M_b - M_e, Hermitian-symmetrized. Throws std::invalid_argument on size mismatch.
CMatrix build_Qv(const SurrogateQuadratic& bob, const SurrogateQuadratic& eve);

struct GeneralizedEigen {
    CVector vector;      // (Reff + ridge I)-normalized
    double value = 0;    // largest generalized eigenvalue
    double ridge = 0;    // diagonal loading actually applied
    double residual = 0; // ||Q v - lambda (Reff + ridge I) v||
};

/// Top eigenpair of the pencil (Q, Reff + ridge I), ridge = 1e-10 tr(Reff) / R.
/// The phase is fixed so the largest-magnitude entry is real and positive.
/// Throws NumericalError (with the instance in the message) if the
/// decomposition fails.
GeneralizedEigen solve_generalized_eig(const CMatrix& Q, const CMatrix& Reff);

/// beta = min(1, sqrt(P_av / ||W v||^2)); returns beta * v. A zero ||W v|| leaves v unchanged.
CVector power_scale(const CVector& v, const CMatrix& W, double available_power);

struct DigitalStep {
    CVector v;               // power-scaled update
    CMatrix Qv;
    GeneralizedEigen eig;
    double anchor_quotient;  // Rayleigh quotient of the anchor on the same pencil (0 for a zero anchor)
    double budget;           // P_av used for scaling
};

/// Surrogates at the current v, generalized eigenvector, then power scaling
/// against the budget left by the current z.
DigitalStep digital_step(const BeamformingState& state, const ChannelRealization& channels,
                         const CMatrix& W, const ValidatedConfig& config);

} // namespace holosec
