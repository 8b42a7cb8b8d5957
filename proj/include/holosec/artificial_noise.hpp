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

/// Orthonormal basis of the complement of span{H_b}. Has R - 1 columns for
/// H_b != 0, R columns for H_b == 0, and none when R == 1 and H_b != 0.
struct NullSpaceBasis {
    CMatrix basis;             // R x (R-1), orthonormal columns
    CVector effective_channel; // H_b = W^H h_b
};

/// H_b = W^H h_b.
CVector effective_bob_channel(const CMatrix& W, const CVector& h_b);

NullSpaceBasis null_space(const CVector& effective_channel);

struct AnDesign {
    CVector z;
    double eve_gain = 0.0; // lambda_max of N^H W^H g_e g_e^H W N
};

/// z = sqrt(P_av) N u, u the unit principal eigenvector of the projected Eve
/// interference matrix N^H (W^H g_e g_e^H W) N. Zero when the basis is empty
/// or the budget is zero.
AnDesign design_an(const NullSpaceBasis& nb, const CMatrix& W, const CVector& g_e,
                   double available_power);

inline CVector an_vector(const NullSpaceBasis& nb, const CMatrix& W, const CVector& g_e,
                         double available_power)
{
    return design_an(nb, W, g_e, available_power).z;
}

} // namespace holosec
