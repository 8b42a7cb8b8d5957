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

#include "holosec/config.hpp"
#include "holosec/types.hpp"

namespace holosec {

/// The three optimization variables.
struct BeamformingState {
    CVector v; // digital beamformer, length R
    RVector w; // holographic amplitudes in [0, 1], length M
    CVector z; // artificial noise, length R
};

/// Power available to the signal ||W v||^2 given the current AN vector.
double signal_budget(const ValidatedConfig& config, const CVector& z);

/// Power available to the AN vector given the current signal power ||W v||^2.
double an_budget(const ValidatedConfig& config, double signal_power);

} // namespace holosec
