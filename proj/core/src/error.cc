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

#include "contextua/error.h"

namespace contextua {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
            return "ParseError";
        case ErrorKind::WidthMismatch:
            return "WidthMismatch";
        case ErrorKind::NonHermitian:
            return "NonHermitian";
        case ErrorKind::IncompleteTable:
            return "IncompleteTable";
        case ErrorKind::NonCommutingGenerators:
            return "NonCommutingGenerators";
        case ErrorKind::MinusIdentityInGroup:
            return "MinusIdentityInGroup";
        case ErrorKind::EmptySpectrum:
            return "EmptySpectrum";
        case ErrorKind::NotASubcontext:
            return "NotASubcontext";
        case ErrorKind::UnknownConstrainedObservable:
            return "UnknownConstrainedObservable";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::DependentGenerators:
            return "DependentGenerators";
        case ErrorKind::WidthTooLarge:
            return "WidthTooLarge";
        case ErrorKind::NonLocalObservable:
            return "NonLocalObservable";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::InvalidResource:
            return "InvalidResource";
        case ErrorKind::IndeterminateInputs:
            return "IndeterminateInputs";
        case ErrorKind::SpecialContextNotStabilizing:
            return "SpecialContextNotStabilizing";
        case ErrorKind::VerificationFailed:
            return "VerificationFailed";
    }
    return "UnknownError";
}

}  // namespace contextua
