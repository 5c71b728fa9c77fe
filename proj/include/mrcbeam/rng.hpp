// SPDX-License-Identifier: Apache-2.0
//
// mrcbeam: beam geometry and wideband SNR of maximal-ratio-combining arrays
// Copyright (C) 2026 The mrcbeam authors
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

#ifndef MRCBEAM_RNG_HPP
#define MRCBEAM_RNG_HPP

#include "mrcbeam/geometry.hpp"

#include <cstdint>

namespace mrcbeam
{

// Separates the stream families drawn from one seed.
enum class StreamKind : std::uint32_t
{
    Trial = 0,
    ArrayParameter = 1,
    Blockage = 2,
};

// Deterministic generator for work item `index` of an experiment. Streams
// depend only on (seed, index, kind), never on scheduling, so any worker
// count reproduces the same draws.
Rng trial_rng(std::uint64_t seed, std::uint64_t index, StreamKind kind = StreamKind::Trial);

} // namespace mrcbeam

#endif
