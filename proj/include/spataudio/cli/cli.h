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

#ifndef SPATAUDIO_CLI_CLI_H_
#define SPATAUDIO_CLI_CLI_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spataudio/audio/audio_buffer.h"
#include "spataudio/scene/scene.h"

namespace spataudio::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs one `spataudio` invocation. args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "id=path,id=path" (several --map flags may be concatenated). Throws
// kValidation on a malformed or repeated pair.
std::map<std::string, std::string> ParseAudioMap(
    const std::vector<std::string>& specs);

struct SynthOptions {
  int sources = 1;
  double duration_s = 1.0;
  std::string preset = "static";
  std::uint64_t seed = 0;
  int sample_rate = 16000;
  // Static-preset position overrides applied to every source.
  std::optional<double> x;
  std::optional<double> y;
  std::optional<double> z;
};

struct SynthOutput {
  scene::SceneDescription scene;
  std::vector<AudioBuffer> stems;  // one per source, mono
};

// Deterministic fixture generator: even-indexed sources are sines, odd ones
// uniform noise, both drawn from a 64-bit Mersenne Twister seeded with
// seed + index. Presets: "static", "sweep" (x from -1 to 1), "approach"
// (z from d_max to d_min). Throws kValidation for unknown presets or
// non-positive counts and durations.
SynthOutput SynthesizeScene(const SynthOptions& options);

}  // namespace spataudio::cli

#endif  // SPATAUDIO_CLI_CLI_H_
