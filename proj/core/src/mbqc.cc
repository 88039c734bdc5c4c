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

#include "contextua/mbqc.h"

#include <algorithm>

#include "contextua/error.h"

namespace contextua::mbqc {

namespace {

PauliOperator local_observable(const std::string &text, size_t parties, size_t party) {
    const auto p = PauliOperator::parse(text);
    if (p.width() == 1) {
        auto placed = PauliOperator::single(parties, party, p.letter(0));
        return p.sign_bit() ? placed.negated() : placed;
    }
    const auto support = p.support();
    if (support.size() > 1 || (p.width() == parties && !support.empty() && support.front() != party)) {
        throw Error(ErrorKind::NonLocalObservable,
                    "observable " + text + " of party " + std::to_string(party + 1) + " is not supported on qubit " +
                        std::to_string(party + 1) + " alone");
    }
    if (p.width() != parties) {
        throw Error(ErrorKind::ShapeMismatch, "observable " + text + " must be one letter or " +
                                                  std::to_string(parties) + " letters wide");
    }
    return p;
}

size_t input_count(const Instance &inst) {
    return size_t{1} << inst.input_bits;
}

struct Assembly {
    MbqcContexts contexts;
    std::vector<size_t> indeterminate;
};

Assembly assemble(const Instance &inst) {
    Assembly out;
    std::vector<PauliOperator> joints;
    for (size_t index = 0; index < input_count(inst); index++) {
        const auto input = gf2::TruthTable::input_at(inst.input_bits, index);
        auto joint = joint_observable(inst, input);
        if (std::find(out.contexts.settings.begin(), out.contexts.settings.end(), joint.settings) ==
            out.contexts.settings.end()) {
            out.contexts.settings.push_back(joint.settings);
            out.contexts.contexts.push_back(std::move(joint.context));
        }
        if (inst.resource.member_sign(joint.observable) == MemberSign::NotMember) {
            out.indeterminate.push_back(index);
            continue;
        }
        auto positive = joint.observable.positive();
        if (std::find(joints.begin(), joints.end(), positive) == joints.end()) {
            joints.push_back(std::move(positive));
        }
    }
    if (!joints.empty()) {
        auto special = ContextGroup::close(joints);
        for (const auto &member : special.members()) {
            out.contexts.pins.push_back({member, inst.resource.member_sign(member) == MemberSign::Minus});
        }
        out.contexts.contexts.push_back(std::move(special));
    }
    return out;
}

std::string input_list(const Instance &inst, const std::vector<size_t> &indices) {
    std::string text;
    for (size_t index : indices) {
        if (!text.empty()) {
            text += ", ";
        }
        text += gf2::TruthTable::input_at(inst.input_bits, index).str();
    }
    return text;
}

}  // namespace

Instance validate_instance(const RawInstance &raw) {
    const size_t n = raw.parties;
    const size_t m = raw.input_bits;
    if (n == 0) {
        throw Error(ErrorKind::ShapeMismatch, "an instance needs at least one party");
    }
    if (m >= 32) {
        throw Error(ErrorKind::ShapeMismatch, "too many input bits");
    }
    if (raw.q_rows.size() != n) {
        throw Error(ErrorKind::ShapeMismatch,
                    "Q has " + std::to_string(raw.q_rows.size()) + " rows, expected " + std::to_string(n));
    }
    for (const auto &row : raw.q_rows) {
        if (row.size() != m) {
            throw Error(ErrorKind::ShapeMismatch,
                        "Q row has " + std::to_string(row.size()) + " columns, expected " + std::to_string(m));
        }
    }
    Instance inst;
    inst.parties = n;
    inst.input_bits = m;
    inst.q = gf2::BitMatrix::from_rows(raw.q_rows, m);
    for (size_t s = 0; s < 2; s++) {
        if (raw.observables[s].size() != n) {
            throw Error(ErrorKind::ShapeMismatch, "setting " + std::to_string(s) + " lists " +
                                                      std::to_string(raw.observables[s].size()) +
                                                      " observables, expected " + std::to_string(n));
        }
        for (size_t k = 0; k < n; k++) {
            inst.observables[s].push_back(local_observable(raw.observables[s][k], n, k));
        }
    }
    std::vector<PauliOperator> generators;
    for (const auto &text : raw.resource) {
        auto g = PauliOperator::parse(text);
        if (g.width() != n) {
            throw Error(ErrorKind::InvalidResource, "resource generator " + text + " does not act on " +
                                                        std::to_string(n) + " qubits");
        }
        generators.push_back(std::move(g));
    }
    try {
        inst.resource = StabilizerGroup::make(generators);
    } catch (const Error &e) {
        throw Error(ErrorKind::InvalidResource, e.what());
    }
    if (!inst.resource.is_full()) {
        throw Error(ErrorKind::InvalidResource, "resource must be a stabilizer state: " + std::to_string(n) +
                                                    " independent generators are required, got " +
                                                    std::to_string(generators.size()));
    }
    return inst;
}

BitVec settings_for(const Instance &inst, const BitVec &input) {
    if (input.size() != inst.input_bits) {
        throw Error(ErrorKind::ShapeMismatch, "input has " + std::to_string(input.size()) + " bits, expected " +
                                                  std::to_string(inst.input_bits));
    }
    return inst.q.apply(input);
}

Joint joint_observable(const Instance &inst, const BitVec &input) {
    const auto q = settings_for(inst, input);
    PauliOperator joint(inst.parties);
    std::vector<PauliOperator> generators;
    for (size_t k = 0; k < inst.parties; k++) {
        const auto &o = inst.observable(k, q.get(k));
        joint = joint * o;
        generators.push_back(o);
    }
    generators.push_back(joint);
    return Joint{q, joint, ContextGroup::close(generators)};
}

std::optional<bool> run(const Instance &inst, const BitVec &input) {
    switch (inst.resource.member_sign(joint_observable(inst, input).observable)) {
        case MemberSign::Plus:
            return false;
        case MemberSign::Minus:
            return true;
        case MemberSign::NotMember:
            break;
    }
    return std::nullopt;
}

std::vector<size_t> indeterminate_inputs(const Instance &inst) {
    std::vector<size_t> result;
    for (size_t index = 0; index < input_count(inst); index++) {
        if (!run(inst, gf2::TruthTable::input_at(inst.input_bits, index))) {
            result.push_back(index);
        }
    }
    return result;
}

gf2::TruthTable truth_table(const Instance &inst) {
    gf2::TruthTable table{inst.input_bits, BitVec(input_count(inst))};
    std::vector<size_t> missing;
    for (size_t index = 0; index < input_count(inst); index++) {
        auto out = run(inst, gf2::TruthTable::input_at(inst.input_bits, index));
        if (!out) {
            missing.push_back(index);
        } else {
            table.outputs.set(index, *out);
        }
    }
    if (!missing.empty()) {
        throw Error(ErrorKind::IndeterminateInputs, input_list(inst, missing));
    }
    return table;
}

MbqcContexts mbqc_contexts(const Instance &inst) {
    auto assembly = assemble(inst);
    if (!assembly.indeterminate.empty()) {
        throw Error(ErrorKind::SpecialContextNotStabilizing,
                    "joint observables outside the resource group for inputs " +
                        input_list(inst, assembly.indeterminate));
    }
    return std::move(assembly.contexts);
}

LinearOutputMap linear_output_map(const GlobalSection &section, const Instance &inst) {
    LinearOutputMap map;
    auto outcome = [&](size_t k, bool setting) -> std::optional<bool> {
        const auto &o = inst.observable(k, setting);
        auto it = section.values.find(o.positive());
        if (it == section.values.end()) {
            return std::nullopt;
        }
        return it->second != o.sign_bit();
    };
    BitVec flips(inst.parties);
    bool constant = false;
    for (size_t k = 0; k < inst.parties; k++) {
        auto s0 = outcome(k, false);
        if (!s0) {
            throw Error(ErrorKind::VerificationFailed, "section does not assign party " + std::to_string(k + 1) +
                                                           "'s setting-0 observable");
        }
        // Setting 1 may be unreachable through Q; its outcome then never enters o(i).
        const bool s1 = outcome(k, true).value_or(*s0);
        map.outcome0.push_back(*s0);
        map.outcome1.push_back(s1);
        flips.set(k, *s0 != s1);
        constant ^= *s0;
    }
    // o(i) = Σ_k s_k(0) ⊕ Σ_k (s_k(0) ⊕ s_k(1))·(Q·i)_k
    map.form = gf2::AffineForm{inst.q.transpose().apply(flips), constant};

    const auto table = truth_table(inst);
    for (size_t index = 0; index < table.outputs.size(); index++) {
        const auto input = gf2::TruthTable::input_at(inst.input_bits, index);
        if (map.form.eval(input) != table.outputs.get(index)) {
            throw Error(ErrorKind::VerificationFailed,
                        "linear output map disagrees with the truth table at input " + input.str());
        }
    }
    return map;
}

ContextualityReport contextuality_report(const Instance &inst) {
    auto assembly = assemble(inst);
    ContextualityReport report;
    report.indeterminate = assembly.indeterminate;
    report.problem = build_global_problem(std::move(assembly.contexts.contexts), std::move(assembly.contexts.pins));
    report.global = solve_global(report.problem);
    if (report.indeterminate.empty()) {
        report.table = truth_table(inst);
        report.affine = gf2::fit_affine(*report.table);
        if (const auto *section = std::get_if<GlobalSection>(&report.global)) {
            report.linear_map = linear_output_map(*section, inst);
        }
    }
    report.theorem_consistent =
        !(std::holds_alternative<GlobalSection>(report.global) && report.table && !report.affine);
    return report;
}

}  // namespace contextua::mbqc
