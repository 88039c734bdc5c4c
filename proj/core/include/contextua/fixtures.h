// Copyright 2026 The Contextua Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTEXTUA_FIXTURES_H
#define CONTEXTUA_FIXTURES_H

#include <vector>

#include "contextua/context.h"
#include "contextua/mbqc.h"
#include "contextua/pauli.h"

namespace contextua::fixtures {

/// σx¹, σy¹, σx², σy², σx³, σy³, XXX, XYY, YXY, YYX.
std::vector<PauliOperator> mermin_observables();

/// The four local contexts {A¹, B², C³, ABC} followed by the context of the
/// four three-qubit observables.
std::vector<ContextGroup> mermin_contexts();

/// +XX...X, +ZZI..., +IZZ..., ...
std::vector<PauliOperator> ghz_generators(size_t n);

/// Three parties on a GHZ state measuring X (setting 0) or Y (setting 1),
/// with q = (i1, i2, i1 ⊕ i2). Computes OR.
mbqc::RawInstance anders_browne();

}  // namespace contextua::fixtures

#endif
