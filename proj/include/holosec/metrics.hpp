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

struct SecrecyReport {
    double sinr_bob = 0.0;
    double sinr_eve = 0.0;
    double rate_bob = 0.0; // bits/s/Hz
    double rate_eve = 0.0;
    double secrecy = 0.0;
    double power_signal = 0.0; // W
    double power_an = 0.0;
    double power_total = 0.0;
};

struct TransmitPower {
    double signal; // ||W v||^2
    double an;     // ||z||^2
};

/// |c^H W v|^2 / (|c^H W z|^2 + noise). Shared by Bob and Eve.
double link_sinr(const CVector& channel, const CMatrix& W, const CVector& v, const CVector& z,
                 double noise_power);

inline double sinr_bob(const CVector& h_b, const CMatrix& W, const CVector& v, const CVector& z,
                       double noise_bob)
{
    return link_sinr(h_b, W, v, z, noise_bob);
}

inline double sinr_eve(const CVector& g_e, const CMatrix& W, const CVector& v, const CVector& z,
                       double noise_eve)
{
    return link_sinr(g_e, W, v, z, noise_eve);
}

/// max(0, log2(1 + sinr_b) - log2(1 + sinr_e)).
double secrecy_rate(double sinr_b, double sinr_e);

TransmitPower transmit_power(const CMatrix& W, const CVector& v, const CVector& z);

SecrecyReport evaluate(const CVector& h_b, const CVector& g_e, const CMatrix& W, const CVector& v,
                       const CVector& z, double noise_bob, double noise_eve);

} // namespace holosec
