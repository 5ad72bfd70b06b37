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

#include "spataudio/cli/cli.h"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "spataudio/audio/wav.h"
#include "spataudio/error.h"
#include "spataudio/file_util.h"
#include "spataudio/metrics/metrics.h"
#include "spataudio/render/render.h"
#include "spataudio/spatial/render_config.h"
#include "spataudio/spatial/spatializer_hrtf.h"

namespace spataudio::cli {
namespace {

// Warnings must not pollute stdout, which carries reports.
void RouteLogsToStderr() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_color_mt("spataudio");
    spdlog::set_default_logger(logger);
  });
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kMeasurement:
    case ErrorKind::kNormalization:
    case ErrorKind::kEvaluation:
      return kExitRuntime;
    default:
      return kExitUsage;
  }
}

struct RenderArgs {
  std::string scene;
  std::string method;
  std::string hrir;
  std::string out;
  int rate = RenderConfig{}.sample_rate;
  std::string clip = "normalize";
  double alpha = RenderConfig{}.alpha;
  double speed_of_sound = RenderConfig{}.speed_of_sound;
  int block = RenderConfig{}.block;
};

struct EvaluateArgs {
  std::string ref;
  std::string pred;
  std::string out;
};

struct SceneBuildArgs {
  std::string detections;
  std::vector<std::string> map;
  double fps = 0.0;
  double hfov = scene::CameraModel{}.h_fov_deg;
  double vfov = scene::CameraModel{}.v_fov_deg;
  double dmin = scene::CameraModel{}.d_min_m;
  double dmax = scene::CameraModel{}.d_max_m;
  std::string out;
};

struct SynthArgs {
  SynthOptions options;
  std::string out_dir;
};

int CmdRender(const RenderArgs& a, std::ostream& out) {
  RenderConfig config;
  const auto method = ParseRenderMethod(a.method);
  if (!method) throw ValidationError("unknown method '" + a.method + "'");
  config.method = *method;
  const auto clip = ParseClipPolicy(a.clip);
  if (!clip) throw ValidationError("unknown clip policy '" + a.clip + "'");
  config.clip_policy = *clip;
  config.sample_rate = a.rate;
  config.alpha = a.alpha;
  config.speed_of_sound = a.speed_of_sound;
  config.block = a.block;
  if (config.method == RenderMethod::kHrtf && a.hrir.empty()) {
    throw ValidationError("--method hrtf requires --hrir");
  }
  if (config.method != RenderMethod::kHrtf && !a.hrir.empty()) {
    throw ValidationError("--hrir is only valid with --method hrtf");
  }
  config.Validate();

  const std::filesystem::path scene_path(a.scene);
  const scene::SceneDescription scene = scene::LoadSceneFile(scene_path);
  std::optional<hrtf::HrirDataset> hrir;
  if (config.method == RenderMethod::kHrtf) {
    hrir = hrtf::LoadHrirManifestFile(a.hrir, config.sample_rate);
  }
  const render::RenderResult result = render::RenderScene(
      scene, config, hrir ? &*hrir : nullptr, scene_path.parent_path());
  WriteWavFile(a.out, result.audio, WavEncoding::kPcm16);

  std::ostringstream line;
  line << "rendered " << result.audio.duration_seconds() << " s, "
       << scene.sources.size() << " source(s), applied_gain "
       << result.applied_gain;
  if (config.clip_policy == ClipPolicy::kHardClip) {
    line << ", clipped_samples " << result.clipped_samples;
  }
  line << " -> " << a.out;
  out << line.str() << "\n";
  return kExitOk;
}

int CmdEvaluate(const EvaluateArgs& a, std::ostream& out) {
  const metrics::MetricsReport report = metrics::EvaluateFiles(a.ref, a.pred);
  const std::string json = report.ToJson();
  if (!a.out.empty()) WriteFileAtomic(a.out, json);
  out << json;
  return kExitOk;
}

int CmdSceneBuild(const SceneBuildArgs& a, std::ostream& out) {
  scene::CameraModel camera;
  camera.h_fov_deg = a.hfov;
  camera.v_fov_deg = a.vfov;
  camera.d_min_m = a.dmin;
  camera.d_max_m = a.dmax;
  camera.Validate();
  if (!(a.fps > 0.0)) throw ValidationError("--fps must be positive");
  const auto audio = ParseAudioMap(a.map);
  const std::vector<std::uint8_t> bytes = ReadFileBytes(a.detections);
  const scene::TrackerOutput tracks = scene::ParseTrackerOutput(
      std::string_view(reinterpret_cast<const char*>(bytes.data()),
                       bytes.size()));
  const scene::SceneDescription scene =
      scene::BuildScene(tracks, audio, a.fps, camera);
  WriteFileAtomic(a.out, scene::SerializeScene(scene));
  out << "wrote scene with " << scene.sources.size() << " source(s) -> "
      << a.out << "\n";
  return kExitOk;
}

int CmdSceneSynth(const SynthArgs& a, std::ostream& out) {
  SynthOutput synth = SynthesizeScene(a.options);
  const std::filesystem::path dir(a.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  for (std::size_t i = 0; i < synth.stems.size(); ++i) {
    WriteWavFile(dir / synth.scene.sources[i].audio_path, synth.stems[i],
                 WavEncoding::kFloat32);
  }
  WriteFileAtomic(dir / "scene.json", scene::SerializeScene(synth.scene));
  out << "wrote " << synth.stems.size() << " stem(s) and scene.json -> "
      << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

std::map<std::string, std::string> ParseAudioMap(
    const std::vector<std::string>& specs) {
  std::map<std::string, std::string> result;
  for (const std::string& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        throw ValidationError("--map entry '" + item + "' is not id=path");
      }
      const std::string id = item.substr(0, eq);
      if (!result.emplace(id, item.substr(eq + 1)).second) {
        throw ValidationError("--map binds id '" + id + "' twice");
      }
    }
  }
  if (result.empty()) throw ValidationError("--map binds no ids");
  return result;
}

SynthOutput SynthesizeScene(const SynthOptions& o) {
  if (o.sources < 1) throw ValidationError("--sources must be at least 1");
  if (!(o.duration_s > 0.0)) throw ValidationError("--duration must be > 0");
  if (o.sample_rate <= 0) throw ValidationError("--rate must be positive");
  if (o.preset != "static" && o.preset != "sweep" && o.preset != "approach") {
    throw ValidationError("unknown preset '" + o.preset +
                          "' (expected static, sweep or approach)");
  }
  SynthOutput result;
  result.scene.fps = 30.0;
  const scene::CameraModel& cam = result.scene.camera;
  const auto frames = static_cast<std::size_t>(
      std::llround(o.duration_s * o.sample_rate));

  for (int i = 0; i < o.sources; ++i) {
    std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(i));
    // 53-bit uniform in [0, 1); mt19937_64 output is fully specified.
    auto uniform = [&rng] {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    Signal samples(frames);
    if (i % 2 == 0) {
      const double freq = 220.0 * (1 + i / 2);
      const double phase = 2.0 * std::numbers::pi * uniform();
      for (std::size_t n = 0; n < frames; ++n) {
        samples[n] = 0.5 * std::sin(2.0 * std::numbers::pi * freq * n /
                                        o.sample_rate +
                                    phase);
      }
    } else {
      for (double& v : samples) v = 0.5 * (2.0 * uniform() - 1.0);
    }
    result.stems.push_back(AudioBuffer::Mono(o.sample_rate, std::move(samples)));

    const double spread =
        o.sources == 1 ? 0.0 : -1.0 + 2.0 * i / (o.sources - 1);
    scene::SourceDescription s;
    s.id = "src" + std::to_string(i);
    s.audio_path = "source_" + std::to_string(i) + ".wav";
    if (o.preset == "static") {
      s.trajectory = {{0.0, o.x.value_or(spread), o.y.value_or(0.0),
                       o.z.value_or(1.0)}};
    } else if (o.preset == "sweep") {
      s.trajectory = {{0.0, -1.0, o.y.value_or(0.0), o.z.value_or(1.0)},
                      {o.duration_s, 1.0, o.y.value_or(0.0), o.z.value_or(1.0)}};
    } else {
      s.trajectory = {
          {0.0, o.x.value_or(spread), o.y.value_or(0.0), cam.d_max_m},
          {o.duration_s, o.x.value_or(spread), o.y.value_or(0.0), cam.d_min_m}};
    }
    result.scene.sources.push_back(std::move(s));
  }
  scene::ValidateScene(result.scene);
  return result;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RouteLogsToStderr();
  CLI::App app{"Binaural spatial audio renderer and evaluator", "spataudio"};
  app.require_subcommand(1);

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Render a scene to stereo WAV");
  render->add_option("--scene", render_args.scene, "Scene JSON")->required();
  render->add_option("--method", render_args.method, "algo3d or hrtf")
      ->required();
  render->add_option("--hrir", render_args.hrir, "HRIR manifest JSON");
  render->add_option("--out", render_args.out, "Output WAV")->required();
  render->add_option("--rate", render_args.rate, "Render rate in Hz")
      ->capture_default_str();
  render->add_option("--clip", render_args.clip, "normalize or hard")
      ->capture_default_str();
  render->add_option("--alpha", render_args.alpha, "Echo level")
      ->capture_default_str();
  render->add_option("--speed-of-sound", render_args.speed_of_sound, "m/s")
      ->capture_default_str();
  render->add_option("--block", render_args.block, "Update block in samples")
      ->capture_default_str();

  EvaluateArgs eval_args;
  auto* evaluate =
      app.add_subcommand("evaluate", "Score predicted audio against a reference");
  evaluate->add_option("--ref", eval_args.ref, "Reference WAV")->required();
  evaluate->add_option("--pred", eval_args.pred, "Predicted WAV")->required();
  evaluate->add_option("--out", eval_args.out, "Also write the report here");

  SceneBuildArgs build_args;
  auto* build =
      app.add_subcommand("scene-build", "Build a scene from tracker detections");
  build->add_option("--detections", build_args.detections, "Tracker JSON")
      ->required();
  build->add_option("--map", build_args.map, "id=path[,id=path...]")
      ->required();
  build->add_option("--fps", build_args.fps, "Video frame rate")->required();
  build->add_option("--hfov", build_args.hfov)->capture_default_str();
  build->add_option("--vfov", build_args.vfov)->capture_default_str();
  build->add_option("--dmin", build_args.dmin)->capture_default_str();
  build->add_option("--dmax", build_args.dmax)->capture_default_str();
  build->add_option("--out", build_args.out, "Scene JSON")->required();

  SynthArgs synth_args;
  double x = 0, y = 0, z = 0;
  auto* synth =
      app.add_subcommand("scene-synth", "Generate seeded test stems and scene");
  synth->add_option("--sources", synth_args.options.sources)->required();
  synth->add_option("--duration", synth_args.options.duration_s, "Seconds")
      ->required();
  synth->add_option("--preset", synth_args.options.preset,
                    "static, sweep or approach")
      ->required();
  synth->add_option("--seed", synth_args.options.seed)->capture_default_str();
  synth->add_option("--rate", synth_args.options.sample_rate)
      ->capture_default_str();
  auto* x_opt = synth->add_option("--x", x, "Static x override");
  auto* y_opt = synth->add_option("--y", y, "y override");
  auto* z_opt = synth->add_option("--z", z, "z override");
  synth->add_option("--out-dir", synth_args.out_dir)->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (render->parsed()) return CmdRender(render_args, out);
    if (evaluate->parsed()) return CmdEvaluate(eval_args, out);
    if (build->parsed()) return CmdSceneBuild(build_args, out);
    if (synth->parsed()) {
      if (*x_opt) synth_args.options.x = x;
      if (*y_opt) synth_args.options.y = y;
      if (*z_opt) synth_args.options.z = z;
      return CmdSceneSynth(synth_args, out);
    }
  } catch (const Error& e) {
    err << "spataudio: " << ErrorKindName(e.kind()) << ": " << e.what()
        << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "spataudio: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace spataudio::cli
