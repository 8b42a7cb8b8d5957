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

#include "holosec/artificial_noise.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace holosec {

CVector effective_bob_channel(const CMatrix& W, const CVector& h_b)
{
    return W.adjoint() * h_b;
}

NullSpaceBasis null_space(const CVector& effective_channel)
{
    NullSpaceBasis nb;
    nb.effective_channel = effective_channel;
    const Eigen::Index R = effective_channel.size();
    if (!(effective_channel.norm() > 0.0)) {
        nb.basis = CMatrix::Identity(R, R);
        return nb;
    }
    // The first Householder vector spans H_b; the remaining columns of the
    // unitary factor span its orthogonal complement.
    const CMatrix column = effective_channel;
    Eigen::HouseholderQR<CMatrix> qr(column);
    const CMatrix Q = qr.householderQ() * CMatrix::Identity(R, R);
    nb.basis = Q.rightCols(R - 1);
    return nb;
}

AnDesign design_an(const NullSpaceBasis& nb, const CMatrix& W, const CVector& g_e,
                   double available_power)
{
    const Eigen::Index R = W.cols();
    AnDesign out;
    out.z = CVector::Zero(R);
    if (nb.basis.cols() == 0 || !(available_power > 0.0))
        return out;

    const CVector c = nb.basis.adjoint() * (W.adjoint() * g_e); // N^H W^H g_e
    const CMatrix projected = c * c.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(projected);
    const Eigen::Index k = projected.rows() - 1;
    CVector u = es.eigenvectors().col(k);
    u /= u.norm();
    out.eve_gain = std::max(0.0, es.eigenvalues()[k]);
    out.z = std::sqrt(available_power) * (nb.basis * u);
    return out;
}

} // namespace holosec
