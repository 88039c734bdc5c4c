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

#ifndef CONTEXTUA_IO_H
#define CONTEXTUA_IO_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "contextua/mbqc.h"
#include "contextua/pauli.h"
#include "contextua/presheaf.h"

namespace contextua::io {

/// Observable-set file: one signed Pauli string per line, `#` starts a comment.
/// A `context:` line opens an explicit context whose members follow, one per
/// line, until the next `context:` line. Every listed operator, inside a block
/// or not, is also an observable.
struct ObservableFile {
    std::vector<PauliOperator> observables;
    std::vector<std::vector<PauliOperator>> contexts;
};

ObservableFile parse_observable_text(std::string_view text);

/// Lines `pin <signed-pauli> <+1|-1>`; `#` comments and blank lines allowed.
std::vector<StateConstraint> parse_pin_text(std::string_view text);

/// JSON instance with fields `parties`, `input_bits`, `Q`, `observables`
/// (object with keys "0" and "1") and `resource`. Q rows may be arrays of 0/1
/// or bit strings.
mbqc::RawInstance parse_instance_json(std::string_view text);

/// Whole file contents; throws a Parse error if the file cannot be read.
std::string read_file(const std::filesystem::path &path);

/// 64-bit FNV-1a digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace contextua::io

#endif
