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

#include "contextua/stabilizer.h"

#include <bit>
#include <cmath>

#include "contextua/error.h"

namespace contextua {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

/// Basis-index mask of a per-qubit bit vector (qubit k -> bit width-1-k).
uint64_t index_mask(const BitVec &bits) {
    uint64_t mask = 0;
    for (size_t k : bits.set_indices()) {
        mask |= uint64_t{1} << (bits.size() - 1 - k);
    }
    return mask;
}

}  // namespace

StabilizerGroup::StabilizerGroup(size_t width, std::vector<PauliOperator> generators, gf2::IncrementalBasis basis)
    : width_(width), generators_(std::move(generators)), basis_(std::move(basis)) {
}

StabilizerGroup StabilizerGroup::make(const std::vector<PauliOperator> &generators) {
    if (generators.empty()) {
        throw Error(ErrorKind::InvalidResource, "a stabilizer group needs at least one generator");
    }
    const size_t n = generators.front().width();
    for (const auto &g : generators) {
        if (g.width() != n) {
            throw Error(ErrorKind::WidthMismatch, "stabilizer generators act on different numbers of qubits");
        }
        if (!g.is_hermitian()) {
            throw Error(ErrorKind::NonHermitian, "stabilizer generators must be Hermitian");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!commutes(generators[i], generators[j])) {
                throw Error(ErrorKind::NonCommutingGenerators,
                            generators[i].str() + " and " + generators[j].str() + " anticommute");
            }
        }
    }
    gf2::IncrementalBasis basis(2 * n);
    for (size_t i = 0; i < generators.size(); i++) {
        const auto &g = generators[i];
        if (basis.add(g.symplectic())) {
            continue;
        }
        PauliOperator product = g;
        for (size_t j : basis.decompose(g.symplectic())->set_indices()) {
            product = product * generators[j];
        }
        if (product.sign_bit()) {
            throw Error(ErrorKind::MinusIdentityInGroup, "generators multiply to -I (at " + g.str() + ")");
        }
        throw Error(ErrorKind::DependentGenerators, g.str() + " is a product of earlier generators");
    }
    return StabilizerGroup(n, generators, std::move(basis));
}

MemberSign StabilizerGroup::member_sign(const PauliOperator &p) const {
    if (p.width() != width_) {
        throw Error(ErrorKind::WidthMismatch, "operator width differs from the stabilizer group");
    }
    auto coefficients = basis_.decompose(p.symplectic());
    if (!coefficients) {
        return MemberSign::NotMember;
    }
    PauliOperator product(width_);
    for (size_t j : coefficients->set_indices()) {
        product = product * generators_[j];
    }
    return product.sign_bit() == p.sign_bit() ? MemberSign::Plus : MemberSign::Minus;
}

StabilizerGroup make_stabilizer(const std::vector<PauliOperator> &generators) {
    return StabilizerGroup::make(generators);
}

MemberSign member_sign(const StabilizerGroup &group, const PauliOperator &p) {
    return group.member_sign(p);
}

DenseState apply_pauli(const PauliOperator &p, const DenseState &psi) {
    if (p.width() != psi.width) {
        throw Error(ErrorKind::WidthMismatch, "operator width differs from the state");
    }
    const uint64_t x = index_mask(p.x_bits());
    const uint64_t z = index_mask(p.z_bits());
    const auto phase = kPhases[p.phase_exp() & 3];
    DenseState out{psi.width, std::vector<std::complex<double>>(psi.amplitudes.size())};
    for (uint64_t b = 0; b < psi.amplitudes.size(); b++) {
        const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
        out.amplitudes[b ^ x] = phase * sign * psi.amplitudes[b];
    }
    return out;
}

DenseState state_vector(const StabilizerGroup &group) {
    const size_t n = group.width();
    if (n > kMaxDenseWidth) {
        throw Error(ErrorKind::WidthTooLarge,
                    std::to_string(n) + " qubits exceed the dense limit of " + std::to_string(kMaxDenseWidth));
    }
    const size_t dim = size_t{1} << n;
    for (size_t seed = 0; seed < dim; seed++) {
        DenseState psi{n, std::vector<std::complex<double>>(dim)};
        psi.amplitudes[seed] = 1.0;
        for (const auto &g : group.generators()) {
            auto moved = apply_pauli(g, psi);
            for (size_t b = 0; b < dim; b++) {
                psi.amplitudes[b] = 0.5 * (psi.amplitudes[b] + moved.amplitudes[b]);
            }
        }
        double norm = 0;
        for (const auto &a : psi.amplitudes) {
            norm += std::norm(a);
        }
        if (norm < 1e-12) {
            continue;
        }
        // Normalise and rotate the first nonzero amplitude onto the positive real axis.
        std::complex<double> lead = 0;
        for (const auto &a : psi.amplitudes) {
            if (std::abs(a) > 1e-12) {
                lead = a / std::abs(a);
                break;
            }
        }
        const auto scale = std::conj(lead) / std::sqrt(norm);
        for (auto &a : psi.amplitudes) {
            a *= scale;
        }
        return psi;
    }
    throw Error(ErrorKind::InvalidResource, "stabilizer projector annihilated every basis state");
}

double expectation(const DenseState &psi, const PauliOperator &p) {
    const auto moved = apply_pauli(p, psi);
    std::complex<double> acc = 0;
    for (size_t b = 0; b < psi.amplitudes.size(); b++) {
        acc += std::conj(psi.amplitudes[b]) * moved.amplitudes[b];
    }
    return acc.real();
}

}  // namespace contextua
