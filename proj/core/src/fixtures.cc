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

#include "contextua/fixtures.h"

#include <string>

namespace contextua::fixtures {

std::vector<PauliOperator> mermin_observables() {
    std::vector<PauliOperator> result;
    for (const char *text : {"XII", "YII", "IXI", "IYI", "IIX", "IIY", "XXX", "XYY", "YXY", "YYX"}) {
        result.push_back(PauliOperator::parse(text));
    }
    return result;
}

std::vector<ContextGroup> mermin_contexts() {
    std::vector<ContextGroup> result;
    for (const char *joint : {"XXX", "XYY", "YXY", "YYX"}) {
        std::vector<PauliOperator> members;
        for (size_t k = 0; k < 3; k++) {
            members.push_back(PauliOperator::single(3, k, joint[k]));
        }
        members.push_back(PauliOperator::parse(joint));
        result.push_back(ContextGroup::close(members));
    }
    result.push_back(ContextGroup::close({PauliOperator::parse("XXX"), PauliOperator::parse("XYY"),
                                          PauliOperator::parse("YXY"), PauliOperator::parse("YYX")}));
    return result;
}

std::vector<PauliOperator> ghz_generators(size_t n) {
    std::vector<PauliOperator> result{PauliOperator::parse(std::string(n, 'X'))};
    for (size_t k = 0; k + 1 < n; k++) {
        std::string zz(n, 'I');
        zz[k] = 'Z';
        zz[k + 1] = 'Z';
        result.push_back(PauliOperator::parse(zz));
    }
    return result;
}

mbqc::RawInstance anders_browne() {
    mbqc::RawInstance raw;
    raw.parties = 3;
    raw.input_bits = 2;
    raw.q_rows = {BitVec::from_string("10"), BitVec::from_string("01"), BitVec::from_string("11")};
    raw.observables[0] = {"X", "X", "X"};
    raw.observables[1] = {"Y", "Y", "Y"};
    raw.resource = {"+XXX", "+ZZI", "+IZZ"};
    return raw;
}

}  // namespace contextua::fixtures
