// Copyright 2026 The iccc-potts Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iccc {

/// Error categories raised by the library. Every failure that a caller may
/// want to branch on carries one of these codes.
enum class Errc {
  InvalidArgument,
  NotPrime,
  InverseOfZero,
  FieldMismatch,
  LogOfZero,
  Parse,
  SelfLoop,
  TooLarge,
  NonIntegerCoefficient,
  ZeroColumn,
  TrivialCharacter,
  InconsistentParams,
  NotCoprime,
  ImaginaryResidue,
  AmbiguousRounding,
  CountMismatch,
  NoConvergence,
  Io,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InverseOfZero: return "InverseOfZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::Parse: return "Parse";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::TrivialCharacter: return "TrivialCharacter";
    case Errc::InconsistentParams: return "InconsistentParams";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ImaginaryResidue: return "ImaginaryResidue";
    case Errc::AmbiguousRounding: return "AmbiguousRounding";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace iccc
