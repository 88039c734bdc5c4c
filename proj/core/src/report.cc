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

#include "contextua/report.h"

#include <sstream>

#include "contextua/error.h"
#include "json.hpp"

namespace contextua {

using nlohmann::json;

namespace {

std::string name_of(const PauliOperator &p) {
    return p.str().substr(1);
}

std::string value_text(int value) {
    return value < 0 ? "-1" : "+1";
}

template <typename T>
void put_optional(json &j, const char *key, const std::optional<T> &value) {
    if (value) {
        j[key] = *value;
    } else {
        j[key] = nullptr;
    }
}

template <typename T>
void get_optional(const json &j, const char *key, std::optional<T> &value) {
    const auto &field = j.at(key);
    if (field.is_null()) {
        value.reset();
    } else {
        value = field.get<T>();
    }
}

}  // namespace

void to_json(json &j, const CertificateLine &line) {
    j = json{{"kind", line.kind},
             {"observables", line.observables},
             {"value", line.value},
             {"equation", line.equation}};
    put_optional(j, "context", line.context);
}

void from_json(const json &j, CertificateLine &line) {
    j.at("kind").get_to(line.kind);
    j.at("observables").get_to(line.observables);
    j.at("value").get_to(line.value);
    j.at("equation").get_to(line.equation);
    get_optional(j, "context", line.context);
}

void to_json(json &j, const ContextSummary &c) {
    j = json{{"members", c.members}, {"relations", c.relations}, {"spectrum_size", c.spectrum_size}};
}

void from_json(const json &j, ContextSummary &c) {
    j.at("members").get_to(c.members);
    j.at("relations").get_to(c.relations);
    j.at("spectrum_size").get_to(c.spectrum_size);
}

void to_json(json &j, const SectionEntry &e) {
    j = json{{"observable", e.observable}, {"value", e.value}};
}

void from_json(const json &j, SectionEntry &e) {
    j.at("observable").get_to(e.observable);
    j.at("value").get_to(e.value);
}

void to_json(json &j, const Analysis &a) {
    j = json{{"label", a.label},
             {"verdict", a.verdict},
             {"observables", a.observables},
             {"contexts", a.contexts},
             {"pins", a.pins},
             {"certificate", a.certificate},
             {"section", a.section}};
    put_optional(j, "solution_dimension", a.solution_dimension);
}

void from_json(const json &j, Analysis &a) {
    j.at("label").get_to(a.label);
    j.at("verdict").get_to(a.verdict);
    j.at("observables").get_to(a.observables);
    j.at("contexts").get_to(a.contexts);
    j.at("pins").get_to(a.pins);
    j.at("certificate").get_to(a.certificate);
    j.at("section").get_to(a.section);
    get_optional(j, "solution_dimension", a.solution_dimension);
}

void to_json(json &j, const TableEntry &e) {
    j = json{{"input", e.input}, {"output", e.output}};
}

void from_json(const json &j, TableEntry &e) {
    j.at("input").get_to(e.input);
    j.at("output").get_to(e.output);
}

void to_json(json &j, const MbqcSummary &m) {
    j = json{{"parties", m.parties},
             {"input_bits", m.input_bits},
             {"table", m.table},
             {"indeterminate", m.indeterminate}};
    put_optional(j, "run_input", m.run_input);
    put_optional(j, "run_output", m.run_output);
    put_optional(j, "affine", m.affine);
    put_optional(j, "affine_a", m.affine_a);
    put_optional(j, "affine_c", m.affine_c);
    put_optional(j, "outcome0", m.outcome0);
    put_optional(j, "outcome1", m.outcome1);
    put_optional(j, "theorem_consistent", m.theorem_consistent);
}

void from_json(const json &j, MbqcSummary &m) {
    j.at("parties").get_to(m.parties);
    j.at("input_bits").get_to(m.input_bits);
    j.at("table").get_to(m.table);
    j.at("indeterminate").get_to(m.indeterminate);
    get_optional(j, "run_input", m.run_input);
    get_optional(j, "run_output", m.run_output);
    get_optional(j, "affine", m.affine);
    get_optional(j, "affine_a", m.affine_a);
    get_optional(j, "affine_c", m.affine_c);
    get_optional(j, "outcome0", m.outcome0);
    get_optional(j, "outcome1", m.outcome1);
    get_optional(j, "theorem_consistent", m.theorem_consistent);
}

void to_json(json &j, const Report &r) {
    j = json{{"tool", r.tool},
             {"version", r.version},
             {"command", r.command},
             {"input_digest", r.input_digest},
             {"analyses", r.analyses}};
    put_optional(j, "mbqc", r.mbqc);
}

void from_json(const json &j, Report &r) {
    j.at("tool").get_to(r.tool);
    j.at("version").get_to(r.version);
    j.at("command").get_to(r.command);
    j.at("input_digest").get_to(r.input_digest);
    j.at("analyses").get_to(r.analyses);
    get_optional(j, "mbqc", r.mbqc);
}

std::string relation_equation(const ContextGroup &context, const Relation &relation) {
    std::string text;
    for (size_t k : relation.members) {
        if (!text.empty()) {
            text += " * ";
        }
        text += "v(" + name_of(context.members()[k]) + ")";
    }
    return text + " = " + value_text(relation.sign ? -1 : 1);
}

Analysis summarize_analysis(std::string label, const GlobalProblem &problem, const GlobalResult &result) {
    Analysis a;
    a.label = std::move(label);
    for (const auto &v : problem.variables) {
        a.observables.push_back(name_of(v));
    }
    for (const auto &ctx : problem.contexts) {
        ContextSummary summary;
        for (const auto &m : ctx.members()) {
            summary.members.push_back(name_of(m));
        }
        for (const auto &rel : ctx.relations()) {
            summary.relations.push_back(relation_equation(ctx, rel));
        }
        summary.spectrum_size = spectrum(ctx).size();
        a.contexts.push_back(std::move(summary));
    }
    for (const auto &pin : problem.constraints) {
        a.pins.push_back("v(" + name_of(pin.observable) + ") = " + value_text(pin.bit ? -1 : 1));
    }

    if (const auto *cert = std::get_if<gf2::Certificate>(&result)) {
        a.verdict = "contextual";
        for (size_t r : cert->row_selector.set_indices()) {
            const auto &origin = problem.origins[r];
            CertificateLine line;
            if (origin.kind == RowOrigin::Kind::Relation) {
                const auto &ctx = problem.contexts[origin.context];
                const auto &rel = ctx.relations()[origin.relation];
                line.kind = "relation";
                line.context = origin.context + 1;
                for (size_t k : rel.members) {
                    line.observables.push_back(name_of(ctx.members()[k]));
                }
                line.value = rel.sign ? -1 : 1;
                line.equation = relation_equation(ctx, rel);
            } else {
                const auto &pin = problem.constraints[origin.relation];
                line.kind = "pin";
                line.observables.push_back(name_of(pin.observable));
                line.value = pin.bit ? -1 : 1;
                line.equation = a.pins[origin.relation];
            }
            a.certificate.push_back(std::move(line));
        }
    } else {
        const auto &section = std::get<GlobalSection>(result);
        a.verdict = "noncontextual";
        for (const auto &v : problem.variables) {
            a.section.push_back({name_of(v), section.values.at(v) ? -1 : 1});
        }
        a.solution_dimension = section.solution_dimension;
    }
    return a;
}

MbqcSummary summarize_table(const mbqc::Instance &inst, const gf2::TruthTable &table) {
    MbqcSummary m;
    m.parties = inst.parties;
    m.input_bits = inst.input_bits;
    for (size_t index = 0; index < table.outputs.size(); index++) {
        m.table.push_back({gf2::TruthTable::input_at(inst.input_bits, index).str(), table.outputs.get(index) ? 1 : 0});
    }
    return m;
}

MbqcSummary summarize_report(const mbqc::Instance &inst, const mbqc::ContextualityReport &report) {
    MbqcSummary m;
    if (report.table) {
        m = summarize_table(inst, *report.table);
        m.affine = report.affine ? "affine" : "not_affine";
        if (report.affine) {
            m.affine_a = report.affine->a.str();
            m.affine_c = report.affine->c ? 1 : 0;
        }
    } else {
        m.parties = inst.parties;
        m.input_bits = inst.input_bits;
    }
    for (size_t index : report.indeterminate) {
        m.indeterminate.push_back(gf2::TruthTable::input_at(inst.input_bits, index).str());
    }
    if (report.linear_map) {
        std::string s0, s1;
        for (size_t k = 0; k < inst.parties; k++) {
            s0 += report.linear_map->outcome0[k] ? '1' : '0';
            s1 += report.linear_map->outcome1[k] ? '1' : '0';
        }
        m.outcome0 = s0;
        m.outcome1 = s1;
    }
    m.theorem_consistent = report.theorem_consistent;
    return m;
}

std::string render_json(const Report &report) {
    return json(report).dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
    try {
        return json::parse(text).get<Report>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
    }
}

namespace {

void render_analysis(std::ostringstream &out, const Analysis &a) {
    out << "== " << a.label << " ==\n";
    out << "observables (" << a.observables.size() << "):";
    for (const auto &o : a.observables) {
        out << ' ' << o;
    }
    out << "\ncontexts (" << a.contexts.size() << "):\n";
    for (size_t c = 0; c < a.contexts.size(); c++) {
        const auto &ctx = a.contexts[c];
        out << "  C" << c + 1 << ":";
        for (const auto &m : ctx.members) {
            out << ' ' << m;
        }
        out << "  [spectrum " << ctx.spectrum_size << "]\n";
        for (const auto &rel : ctx.relations) {
            out << "      " << rel << "\n";
        }
    }
    if (!a.pins.empty()) {
        out << "pins (" << a.pins.size() << "):\n";
        for (const auto &pin : a.pins) {
            out << "  " << pin << "\n";
        }
    }
    out << "verdict: " << a.verdict << "\n";
    if (a.verdict == "contextual") {
        out << "certificate (" << a.certificate.size() << " lines):\n";
        int sign = 1;
        for (const auto &line : a.certificate) {
            out << "  [" << (line.context ? "C" + std::to_string(*line.context) : std::string("pin")) << "] "
                << line.equation << "\n";
            sign *= line.value;
        }
        out << "  product of the " << a.certificate.size()
            << " lines: every observable appears an even number of times, so 1 = " << value_text(sign)
            << " => contradiction\n";
    } else {
        out << "global section";
        if (a.solution_dimension) {
            out << " (solution space dimension " << *a.solution_dimension << ")";
        }
        out << ":\n";
        for (const auto &e : a.section) {
            out << "  v(" << e.observable << ") = " << value_text(e.value) << "\n";
        }
    }
}

std::string table_line(const MbqcSummary &m) {
    std::string line;
    for (const auto &e : m.table) {
        if (!line.empty()) {
            line += ' ';
        }
        line += e.input + ":" + std::to_string(e.output);
    }
    return line;
}

}  // namespace

std::string render_text(const Report &report) {
    std::ostringstream out;
    if (report.command == "mbqc run" && report.mbqc && report.mbqc->run_output) {
        out << *report.mbqc->run_output << "\n";
        return out.str();
    }
    if (report.command == "mbqc table" && report.mbqc) {
        out << table_line(*report.mbqc) << "\n";
        return out.str();
    }
    out << report.tool << " " << report.version << " " << report.command << "\n";
    out << "input digest: " << report.input_digest << "\n";
    for (const auto &a : report.analyses) {
        render_analysis(out, a);
    }
    if (report.mbqc) {
        const auto &m = *report.mbqc;
        out << "== mbqc ==\n";
        out << "parties: " << m.parties << ", input bits: " << m.input_bits << "\n";
        if (!m.table.empty()) {
            out << "truth table: " << table_line(m) << "\n";
        }
        if (!m.indeterminate.empty()) {
            out << "indeterminate inputs:";
            for (const auto &i : m.indeterminate) {
                out << ' ' << i;
            }
            out << "\n";
        }
        if (m.affine) {
            if (*m.affine == "affine") {
                out << "affine: o(i) = " << *m.affine_a << " . i + " << *m.affine_c << "\n";
            } else {
                out << "affine: NotAffine\n";
            }
        }
        if (m.outcome0 && m.outcome1) {
            out << "linear output map: s(0) = " << *m.outcome0 << ", s(1) = " << *m.outcome1 << "\n";
        }
        if (m.theorem_consistent) {
            out << "theorem_consistent: " << (*m.theorem_consistent ? "true" : "false") << "\n";
        }
    }
    return out.str();
}

}  // namespace contextua
