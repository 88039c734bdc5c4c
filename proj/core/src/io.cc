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

#include "contextua/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "contextua/error.h"
#include "json.hpp"

namespace contextua::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Calls f(line_number, content) for every non-blank line with comments removed.
template <typename F>
void for_each_line(std::string_view text, F &&f) {
    size_t line_number = 0;
    while (!text.empty()) {
        line_number++;
        const auto end = text.find('\n');
        auto line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            f(line_number, line);
        }
    }
}

PauliOperator parse_at(size_t line_number, std::string_view token) {
    try {
        return PauliOperator::parse(token);
    } catch (const Error &e) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_number) + ": " + e.what());
    }
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    while (true) {
        line = trim(line);
        if (line.empty()) {
            return tokens;
        }
        const auto end = line.find_first_of(" \t");
        tokens.push_back(line.substr(0, end));
        if (end == std::string_view::npos) {
            return tokens;
        }
        line = line.substr(end);
    }
}

}  // namespace

ObservableFile parse_observable_text(std::string_view text) {
    ObservableFile file;
    bool in_block = false;
    for_each_line(text, [&](size_t line_number, std::string_view line) {
        if (line.starts_with("context:")) {
            if (!trim(line.substr(8)).empty()) {
                throw Error(ErrorKind::Parse,
                            "line " + std::to_string(line_number) + ": members of a context go on their own lines");
            }
            file.contexts.emplace_back();
            in_block = true;
            return;
        }
        auto p = parse_at(line_number, line);
        if (!file.observables.empty() && p.width() != file.observables.front().width()) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_number) + ": " + std::string(line) +
                                              " has width " + std::to_string(p.width()) + ", expected " +
                                              std::to_string(file.observables.front().width()));
        }
        if (in_block) {
            file.contexts.back().push_back(p);
        }
        file.observables.push_back(std::move(p));
    });
    for (size_t c = 0; c < file.contexts.size(); c++) {
        if (file.contexts[c].empty()) {
            throw Error(ErrorKind::Parse, "context block " + std::to_string(c + 1) + " has no members");
        }
    }
    return file;
}

std::vector<StateConstraint> parse_pin_text(std::string_view text) {
    std::vector<StateConstraint> pins;
    for_each_line(text, [&](size_t line_number, std::string_view line) {
        const auto tokens = split_ws(line);
        if (tokens.size() != 3 || tokens[0] != "pin" || (tokens[2] != "+1" && tokens[2] != "-1")) {
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(line_number) + ": expected `pin <signed-pauli> <+1|-1>`");
        }
        pins.push_back(StateConstraint::from_signed(parse_at(line_number, tokens[1]), tokens[2] == "-1"));
    });
    return pins;
}

mbqc::RawInstance parse_instance_json(std::string_view text) {
    using nlohmann::json;
    mbqc::RawInstance raw;
    try {
        const auto doc = json::parse(text);
        raw.parties = doc.at("parties").get<size_t>();
        raw.input_bits = doc.at("input_bits").get<size_t>();
        for (const auto &row : doc.at("Q")) {
            if (row.is_string()) {
                raw.q_rows.push_back(BitVec::from_string(row.get<std::string>()));
                continue;
            }
            BitVec bits(row.size());
            for (size_t j = 0; j < row.size(); j++) {
                const int bit = row.at(j).get<int>();
                if (bit != 0 && bit != 1) {
                    throw Error(ErrorKind::Parse, "Q entries must be 0 or 1");
                }
                bits.set(j, bit == 1);
            }
            raw.q_rows.push_back(std::move(bits));
        }
        const auto &obs = doc.at("observables");
        raw.observables[0] = obs.at("0").get<std::vector<std::string>>();
        raw.observables[1] = obs.at("1").get<std::vector<std::string>>();
        raw.resource = doc.at("resource").get<std::vector<std::string>>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("instance file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(ErrorKind::Parse, std::string("instance file: ") + e.what());
    }
    return raw;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a64_hex(std::string_view bytes) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

}  // namespace contextua::io
