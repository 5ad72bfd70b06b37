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

#ifndef SPATAUDIO_FILE_UTIL_H_
#define SPATAUDIO_FILE_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace spataudio {

// Throws an I/O error naming the path when the file cannot be read.
std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);

// Writes to "<path>.tmp.<pid>" and renames over `path`. The temporary is
// removed if anything fails.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes);
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace spataudio

#endif  // SPATAUDIO_FILE_UTIL_H_
