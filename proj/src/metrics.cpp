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

#include "holosec/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace holosec {

double link_sinr(const CVector& channel, const CMatrix& W, const CVector& v, const CVector& z,
                 double noise_power)
{
    const CVector eff = W.adjoint() * channel; // W^H c, so c^H W x = eff^H x
    const double signal = std::norm(eff.dot(v));
    const double leak = std::norm(eff.dot(z));
    return signal / (leak + noise_power);
}

double secrecy_rate(double sinr_b, double sinr_e)
{
    return std::max(0.0, std::log2(1.0 + sinr_b) - std::log2(1.0 + sinr_e));
}

TransmitPower transmit_power(const CMatrix& W, const CVector& v, const CVector& z)
{
    return {(W * v).squaredNorm(), z.squaredNorm()};
}

SecrecyReport evaluate(const CVector& h_b, const CVector& g_e, const CMatrix& W, const CVector& v,
                       const CVector& z, double noise_bob, double noise_eve)
{
    SecrecyReport r;
    r.sinr_bob = sinr_bob(h_b, W, v, z, noise_bob);
    r.sinr_eve = sinr_eve(g_e, W, v, z, noise_eve);
    r.rate_bob = std::log2(1.0 + r.sinr_bob);
    r.rate_eve = std::log2(1.0 + r.sinr_eve);
    r.secrecy = std::max(0.0, r.rate_bob - r.rate_eve);
    const auto p = transmit_power(W, v, z);
    r.power_signal = p.signal;
    r.power_an = p.an;
    r.power_total = p.signal + p.an;
    return r;
}

} // namespace holosec
