// Copyright 2026 The Spataudio Authors
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

#ifndef SPATAUDIO_ERROR_H_
#define SPATAUDIO_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spataudio {

// Every failure raised by the library carries one of these kinds. The CLI maps
// kIo, kMeasurement and kEvaluation to exit code 1 and the rest to exit code 2.
enum class ErrorKind {
  kDomain,
  kConfiguration,
  kParse,
  kValidation,
  kFormat,
  kIo,
  kMeasurement,
  kNormalization,
  kPrecondition,
  kEvaluation,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error DomainError(const std::string& m) {
  return Error(ErrorKind::kDomain, m);
}
inline Error ConfigurationError(const std::string& m) {
  return Error(ErrorKind::kConfiguration, m);
}
inline Error ParseError(const std::string& m) {
  return Error(ErrorKind::kParse, m);
}
inline Error ValidationError(const std::string& m) {
  return Error(ErrorKind::kValidation, m);
}
inline Error FormatError(const std::string& m) {
  return Error(ErrorKind::kFormat, m);
}
inline Error IoError(const std::string& m) { return Error(ErrorKind::kIo, m); }

}  // namespace spataudio

#endif  // SPATAUDIO_ERROR_H_
