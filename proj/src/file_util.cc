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

#include "spataudio/file_util.h"

#include <unistd.h>

#include <fstream>
#include <iterator>
#include <system_error>

#include "spataudio/error.h"

namespace spataudio {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kConfiguration:
      return "configuration error";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kValidation:
      return "validation error";
    case ErrorKind::kFormat:
      return "format error";
    case ErrorKind::kIo:
      return "I/O error";
    case ErrorKind::kMeasurement:
      return "measurement error";
    case ErrorKind::kNormalization:
      return "normalization error";
    case ErrorKind::kPrecondition:
      return "precondition error";
    case ErrorKind::kEvaluation:
      return "evaluation error";
  }
  return "error";
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return bytes;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename into '" + path.string() + "': " +
                  ec.message());
  }
}

void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& text) {
  WriteFileAtomic(path, std::span(reinterpret_cast<const std::uint8_t*>(
                                      text.data()),
                                  text.size()));
}

}  // namespace spataudio
