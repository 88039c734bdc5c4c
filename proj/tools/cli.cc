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

#include "cli.h"

#include <algorithm>
#include <vector>

#include "CLI11.hpp"
#include "contextua/error.h"
#include "contextua/fixtures.h"
#include "contextua/io.h"
#include "contextua/mbqc.h"
#include "contextua/presheaf.h"
#include "contextua/stabilizer.h"

namespace contextua::cli {

namespace {

std::vector<ContextGroup> contexts_for(const io::ObservableFile &obs, const std::optional<io::ObservableFile> &extra) {
    std::vector<std::vector<PauliOperator>> blocks = obs.contexts;
    if (extra) {
        blocks.insert(blocks.end(), extra->contexts.begin(), extra->contexts.end());
    }
    if (blocks.empty()) {
        return maximal_contexts(obs.observables);
    }
    std::vector<ContextGroup> contexts;
    for (const auto &block : blocks) {
        contexts.push_back(ContextGroup::close(block));
    }
    for (const auto &p : canonical_observables(obs.observables)) {
        bool covered = std::any_of(contexts.begin(), contexts.end(),
                                   [&](const ContextGroup &c) { return c.index_of(p).has_value(); });
        if (!covered) {
            contexts.push_back(ContextGroup::close({p}));
        }
    }
    return contexts;
}

std::string analysis_label(size_t pins) {
    if (pins == 0) {
        return "state-independent";
    }
    return "state-dependent (" + std::to_string(pins) + " pins)";
}

}  // namespace

Report cmd_analyze(const AnalyzeInputs &inputs) {
    const auto obs = io::parse_observable_text(inputs.observables);
    if (obs.observables.empty()) {
        throw Error(ErrorKind::Parse, "observable file lists no observables");
    }
    std::optional<io::ObservableFile> extra;
    if (inputs.contexts) {
        extra = io::parse_observable_text(*inputs.contexts);
        if (extra->contexts.empty()) {
            throw Error(ErrorKind::Parse, "context file has no `context:` blocks");
        }
        if (extra->observables.front().width() != obs.observables.front().width()) {
            throw Error(ErrorKind::Parse, "context file and observable file differ in width");
        }
    }
    std::vector<StateConstraint> pins;
    if (inputs.pins) {
        pins = io::parse_pin_text(*inputs.pins);
    }

    auto problem = build_global_problem(contexts_for(obs, extra), pins);
    const auto result = solve_global(problem);

    Report report;
    report.command = "analyze";
    report.input_digest = io::fnv1a64_hex(inputs.observables + '\0' + inputs.contexts.value_or("") + '\0' +
                                          inputs.pins.value_or(""));
    report.analyses.push_back(summarize_analysis(analysis_label(pins.size()), problem, result));
    return report;
}

Report cmd_mermin() {
    const auto contexts = fixtures::mermin_contexts();
    const auto ghz = StabilizerGroup::make(fixtures::ghz_generators(3));
    std::vector<StateConstraint> pins;
    for (const auto &joint : contexts.back().members()) {
        pins.push_back({joint, ghz.member_sign(joint) == MemberSign::Minus});
    }

    Report report;
    report.command = "mermin";
    report.input_digest = io::fnv1a64_hex("builtin:mermin");
    const auto independent = build_global_problem(contexts, {});
    report.analyses.push_back(summarize_analysis("state-independent", independent, solve_global(independent)));
    const auto pinned = build_global_problem(contexts, pins);
    report.analyses.push_back(summarize_analysis("state-dependent (GHZ)", pinned, solve_global(pinned)));
    return report;
}

Report cmd_mbqc(std::string_view instance_json, MbqcMode mode, const std::optional<std::string> &input_bits) {
    const auto inst = mbqc::validate_instance(io::parse_instance_json(instance_json));
    Report report;
    report.input_digest = io::fnv1a64_hex(instance_json);
    switch (mode) {
        case MbqcMode::Run: {
            report.command = "mbqc run";
            BitVec input;
            try {
                input = BitVec::from_string(input_bits.value_or(""));
            } catch (const std::invalid_argument &e) {
                throw Error(ErrorKind::Parse, std::string("--input: ") + e.what());
            }
            const auto out = mbqc::run(inst, input);
            MbqcSummary m;
            m.parties = inst.parties;
            m.input_bits = inst.input_bits;
            m.run_input = input.str();
            m.run_output = out ? (*out ? "1" : "0") : "Indeterminate";
            report.mbqc = m;
            break;
        }
        case MbqcMode::Table:
            report.command = "mbqc table";
            report.mbqc = summarize_table(inst, mbqc::truth_table(inst));
            break;
        case MbqcMode::Report: {
            report.command = "mbqc report";
            const auto cr = mbqc::contextuality_report(inst);
            report.analyses.push_back(summarize_analysis("mbqc contexts", cr.problem, cr.global));
            report.mbqc = summarize_report(inst, cr);
            break;
        }
    }
    return report;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Contextuality of Pauli observable sets and l2-MBQC instances", "contextua"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string format = "text";
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *analyze = app.add_subcommand("analyze", "Decide whether an observable set admits a global section");
    std::string obs_path;
    std::string ctx_path;
    std::string pin_path;
    analyze->add_option("--obs", obs_path, "Observable file")->required();
    analyze->add_option("--contexts", ctx_path, "File of explicit `context:` blocks");
    analyze->add_option("--pin", pin_path, "Eigenvalue pin file");
    add_format(analyze);

    auto *mermin = app.add_subcommand("mermin", "Run the built-in Mermin example");
    add_format(mermin);

    auto *mbqc_cmd = app.add_subcommand("mbqc", "Simulate an l2-MBQC instance");
    std::string instance_path;
    mbqc_cmd->add_option("--instance", instance_path, "Instance JSON file")->required();
    add_format(mbqc_cmd);
    mbqc_cmd->require_subcommand(1);
    auto *run_cmd = mbqc_cmd->add_subcommand("run", "Output bit for one input");
    std::string bits;
    run_cmd->add_option("--input", bits, "Input bits i_1 i_2 ... as a 0/1 string")->required();
    add_format(run_cmd);
    auto *table_cmd = mbqc_cmd->add_subcommand("table", "Full truth table");
    add_format(table_cmd);
    auto *report_cmd = mbqc_cmd->add_subcommand("report", "Contextuality report");
    add_format(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        Report report;
        if (*analyze) {
            AnalyzeInputs inputs{io::read_file(obs_path), {}, {}};
            if (!ctx_path.empty()) {
                inputs.contexts = io::read_file(ctx_path);
            }
            if (!pin_path.empty()) {
                inputs.pins = io::read_file(pin_path);
            }
            report = cmd_analyze(inputs);
        } else if (*mermin) {
            report = cmd_mermin();
        } else {
            const auto text = io::read_file(instance_path);
            if (*run_cmd) {
                report = cmd_mbqc(text, MbqcMode::Run, bits);
            } else if (*table_cmd) {
                report = cmd_mbqc(text, MbqcMode::Table);
            } else {
                report = cmd_mbqc(text, MbqcMode::Report);
            }
        }
        out << (format == "json" ? render_json(report) : render_text(report));
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::IndeterminateInputs ? kExitIndeterminate : kExitInputError;
    }
}

}  // namespace contextua::cli
