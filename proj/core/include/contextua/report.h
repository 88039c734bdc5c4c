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

#ifndef CONTEXTUA_REPORT_H
#define CONTEXTUA_REPORT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contextua/mbqc.h"
#include "contextua/presheaf.h"

namespace contextua {

inline constexpr std::string_view kVersion = "0.1.0";

/// One row of a certificate: a context relation or a pinned eigenvalue,
/// written as a product equation over observable values.
struct CertificateLine {
    std::string kind;               // "relation" or "pin"
    std::optional<size_t> context;  // 1-based context number for relations
    std::vector<std::string> observables;
    int value = 1;  // +1 or -1
    std::string equation;

    bool operator==(const CertificateLine &) const = default;
};

struct ContextSummary {
    std::vector<std::string> members;
    std::vector<std::string> relations;
    uint64_t spectrum_size = 0;

    bool operator==(const ContextSummary &) const = default;
};

struct SectionEntry {
    std::string observable;
    int value = 1;

    bool operator==(const SectionEntry &) const = default;
};

/// Global-section decision for one set of contexts and pins.
struct Analysis {
    std::string label;
    std::string verdict;  // "contextual" or "noncontextual"
    std::vector<std::string> observables;
    std::vector<ContextSummary> contexts;
    std::vector<std::string> pins;
    std::vector<CertificateLine> certificate;
    std::vector<SectionEntry> section;
    std::optional<size_t> solution_dimension;

    bool operator==(const Analysis &) const = default;
};

struct TableEntry {
    std::string input;
    int output = 0;

    bool operator==(const TableEntry &) const = default;
};

struct MbqcSummary {
    size_t parties = 0;
    size_t input_bits = 0;
    std::optional<std::string> run_input;
    std::optional<std::string> run_output;  // "0", "1" or "Indeterminate"
    std::vector<TableEntry> table;
    std::vector<std::string> indeterminate;
    std::optional<std::string> affine;  // "affine", "not_affine"; absent when the table is incomplete
    std::optional<std::string> affine_a;
    std::optional<int> affine_c;
    std::optional<std::string> outcome0;  // s_k(0) for k = 1..n, from the global section
    std::optional<std::string> outcome1;
    std::optional<bool> theorem_consistent;

    bool operator==(const MbqcSummary &) const = default;
};

struct Report {
    std::string tool = "contextua";
    std::string version = std::string(kVersion);
    std::string command;
    std::string input_digest;
    std::vector<Analysis> analyses;
    std::optional<MbqcSummary> mbqc;

    bool operator==(const Report &) const = default;
};

/// Equation text for a relation, e.g. "v(XII) * v(IXI) * v(IIX) * v(XXX) = +1".
std::string relation_equation(const ContextGroup &context, const Relation &relation);

Analysis summarize_analysis(std::string label, const GlobalProblem &problem, const GlobalResult &result);
MbqcSummary summarize_table(const mbqc::Instance &inst, const gf2::TruthTable &table);
MbqcSummary summarize_report(const mbqc::Instance &inst, const mbqc::ContextualityReport &report);

std::string render_json(const Report &report);
/// Inverse of render_json; throws a Parse error on malformed input.
Report parse_report_json(std::string_view text);
std::string render_text(const Report &report);

}  // namespace contextua

#endif
