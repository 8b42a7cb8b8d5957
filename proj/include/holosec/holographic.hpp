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

#include "holosec/types.hpp"

namespace holosec {

/// diag(phi x)^H c c^H diag(phi x). For every real w,
/// w^T Re(result) w = |c^H diag(w) phi x|^2.
CMatrix quadratic_form_matrix(const CVector& channel, const CMatrix& phi, const CVector& x);

/// Everything the amplitude update holds fixed.
struct HolographicContext {
    CVector h_b;
    CVector g_e;
    CMatrix phi;
    CVector v;
    CVector z;
    double noise_bob = 0.0;
    double noise_eve = 0.0;
};

struct HolographicSurrogate {
    RMatrix Q;            // Re(M_b^(t) - M_e^(t)), symmetric
    RVector anchor;       // w_t
    double denom_bob = 0; // w_t^T Re(AN form) w_t + noise, at the anchor
    double denom_eve = 0;
    double sinr_bob = 0;  // numerator / denominator at the anchor
    double sinr_eve = 0;

    double value(const RVector& w) const { return w.dot(Q * w); }
};

HolographicSurrogate surrogate_Qw(const HolographicContext& ctx, const RVector& anchor);

/// 2 Q w.
RVector gradient(const RMatrix& Q, const RVector& w);

/// Elementwise clamp to [0, 1].
RVector project_box(const RVector& w);

struct HolographicOptions {
    double learning_rate = 0.01;
    double tolerance = 1e-5;
    int max_iters = 500;
    int max_halvings = 20;
};

struct HolographicResult {
    RVector w;
    int iterations = 0;
    bool converged = false;   // step norm fell below tolerance
    int halvings = 0;         // total step halvings across iterations
};

/// Projected gradient ascent on w^T Q w with Q rebuilt at every iterate.
/// A step that lowers the fixed-anchor surrogate is retried with half the
/// step size; if none of the retries ascends the iteration stops.
HolographicResult optimize_holographic(const RVector& w_init, const HolographicContext& ctx,
                                       const HolographicOptions& opts);

} // namespace holosec
