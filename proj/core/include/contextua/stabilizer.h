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

#ifndef CONTEXTUA_STABILIZER_H
#define CONTEXTUA_STABILIZER_H

#include <complex>
#include <cstddef>
#include <vector>

#include "contextua/gf2.h"
#include "contextua/pauli.h"

namespace contextua {

enum class MemberSign { Plus, Minus, NotMember };

/// Abelian group of Hermitian Paulis with independent generators and no -I.
class StabilizerGroup {
   public:
    StabilizerGroup() = default;

    /// Throws NonCommutingGenerators, DependentGenerators, MinusIdentityInGroup,
    /// NonHermitian or WidthMismatch.
    static StabilizerGroup make(const std::vector<PauliOperator> &generators);

    size_t width() const noexcept {
        return width_;
    }
    const std::vector<PauliOperator> &generators() const noexcept {
        return generators_;
    }
    /// n independent generators on n qubits: a unique stabilizer state.
    bool is_full() const noexcept {
        return generators_.size() == width_;
    }

    /// Plus if p is in the group, Minus if -p is, NotMember otherwise.
    MemberSign member_sign(const PauliOperator &p) const;

   private:
    StabilizerGroup(size_t width, std::vector<PauliOperator> generators, gf2::IncrementalBasis basis);

    size_t width_ = 0;
    std::vector<PauliOperator> generators_;
    gf2::IncrementalBasis basis_{0};
};

StabilizerGroup make_stabilizer(const std::vector<PauliOperator> &generators);
MemberSign member_sign(const StabilizerGroup &group, const PauliOperator &p);

/// Dense amplitudes; basis index bit (width-1-k) is the value of qubit k.
struct DenseState {
    size_t width = 0;
    std::vector<std::complex<double>> amplitudes;
};

constexpr size_t kMaxDenseWidth = 10;

DenseState apply_pauli(const PauliOperator &p, const DenseState &psi);
/// A normalised state fixed by every generator. Throws WidthTooLarge past 10 qubits.
DenseState state_vector(const StabilizerGroup &group);
/// ⟨ψ|P|ψ⟩ (real part; exact for Hermitian P).
double expectation(const DenseState &psi, const PauliOperator &p);

}  // namespace contextua

#endif
