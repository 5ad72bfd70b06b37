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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "spataudio/audio/audio_buffer.h"
#include "spataudio/audio/loudness.h"
#include "spataudio/audio/wav.h"
#include "spataudio/dsp/signal_ops.h"
#include "spataudio/dsp/stft.h"
#include "spataudio/file_util.h"
#include "spataudio/metrics/metrics.h"
#include "spataudio/scene/geometry.h"
#include "spataudio/spatial/render_config.h"
#include "spataudio/spatial/spatializer_3d.h"
#include "spataudio/spatial/spatializer_hrtf.h"
#include "support/oracles.h"

namespace spataudio {
namespace {

namespace t = ::spataudio::testing;

// Collects failed checks for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(12);
    s << what << ": got " << got << ", want " << want << " +/- " << tol;
    Expect(std::abs(got - want) <= tol, s.str());
  }
  void Note(const std::string& note) { notes_.push_back(note); }

  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string s;
    for (const auto& n : notes_) s += "; " + n;
    for (const auto& f : failures_) s += "; " + f;
    if (failed_ > failures_.size()) {
      s += "; (" + std::to_string(failed_ - failures_.size()) + " more)";
    }
    return s;
  }

 private:
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Checker&)> body;
};

void ClosedFormMappings(Checker& c) {
  using scene::CameraModel;
  const CameraModel cam;
  const auto left_top = scene::NormalizeCenter(0.0, 0.0);
  const auto centre = scene::NormalizeCenter(0.5, 0.5);
  const auto right_bottom = scene::NormalizeCenter(1.0, 1.0);
  c.Near(left_top.x, -1.0, 1e-9, "x at left edge");
  c.Near(left_top.y, 1.0, 1e-9, "y at top edge");
  c.Near(centre.x, 0.0, 1e-9, "x at centre");
  c.Near(centre.y, 0.0, 1e-9, "y at centre");
  c.Near(right_bottom.x, 1.0, 1e-9, "x at right edge");
  c.Near(right_bottom.y, -1.0, 1e-9, "y at bottom edge");

  c.Near(scene::DepthFromGray(0.0, cam), 5.0, 1e-9, "depth at gray 0");
  c.Near(scene::DepthFromGray(255.0, cam), 0.1, 1e-9, "depth at gray 255");
  for (int g = 1; g < 256; ++g) {
    c.Expect(scene::DepthFromGray(g, cam) < scene::DepthFromGray(g - 1, cam),
             "depth not strictly decreasing at gray " + std::to_string(g));
  }

  const Signal one{1.0};
  for (int i = 0; i <= 1000; ++i) {
    const double x = -1.0 + 2.0 * i / 1000.0;
    const auto p = algo3d::PanLeftRight(one, x);
    c.Expect(p.left[0] + p.right[0] == 1.0,
             "pan sum not exact at x=" + std::to_string(x));
  }

  for (double f : {0.0, 250.0, 1000.0, 4000.0, 7999.0}) {
    c.Near(algo3d::ElevationGain(f, 0.0), 1.0, 1e-9, "elevation gain at y=0");
  }
  c.Near(algo3d::ElevationGain(4000.0, -0.2), 0.0, 1e-9,
         "elevation clamp at f=4000, y=-0.2");

  struct Tap {
    double z;
    int delay;
    double direct;
    double echo;
  };
  for (const Tap& tap : {Tap{0.343, 16, 2.915, 0.874}, Tap{2.0, 93, 0.5, 0.15}}) {
    const std::string at = "z=" + std::to_string(tap.z);
    c.Expect(algo3d::DistanceEffect::DelaySamples(tap.z, 16000, 343.0) ==
                 tap.delay,
             at + ": delay");
    algo3d::DistanceEffect effect(16000, 0.3, 343.0, 5.0);
    Signal impulse(160, 0.0);
    impulse[0] = 1.0;
    const Signal y = effect.Process(impulse, tap.z);
    c.Near(y[0], 1.0 / tap.z, 1e-9, at + ": direct tap");
    c.Near(y[tap.delay], 0.3 / tap.z, 1e-9, at + ": echo tap");
    // The quoted gains carry three decimals.
    c.Near(y[0], tap.direct, 1e-3, at + ": direct tap (quoted)");
    c.Near(y[tap.delay], tap.echo, 1e-3, at + ": echo tap (quoted)");
    double others = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i != 0 && i != static_cast<std::size_t>(tap.delay)) {
        others = std::max(others, std::abs(y[i]));
      }
    }
    c.Near(others, 0.0, 1e-9, at + ": stray taps");
  }
}

void StftRoundTrip(Checker& c) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Signal x = t::WhiteNoise(16000, 100 + k);
    const Signal y = dsp::Istft(dsp::Stft(x, dsp::StftParams{}, 16000));
    if (y.size() != x.size()) {
      c.Expect(false, "length changed");
      continue;
    }
    double err = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 200; i + 200 < x.size(); ++i, ++n) {
      err += (x[i] - y[i]) * (x[i] - y[i]);
    }
    worst = std::max(worst, std::sqrt(err / n));
  }
  c.Expect(worst < 1e-6, "interior RMS error " + std::to_string(worst));
  std::ostringstream s;
  s << "worst RMS " << worst;
  c.Note(s.str());
}

void ConvolutionEquivalence(Checker& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> sig_len(1, 2000), ir_len(1, 256);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Signal a = t::WhiteNoise(sig_len(rng), 200 + k, 1.0);
    const Signal b = t::WhiteNoise(ir_len(rng), 300 + k, 1.0);
    const Signal got = dsp::FftConvolve(a, b);
    const Signal want = t::DirectConvolve(a, b);
    c.Expect(got.size() == want.size(), "length mismatch");
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
      worst = std::max(worst, std::abs(got[i] - want[i]));
    }
  }
  c.Expect(worst < 1e-9, "max abs error " + std::to_string(worst));
  std::ostringstream s;
  s << "max abs error " << worst;
  c.Note(s.str());
}

void NearestNeighbour(Checker& c) {
  hrtf::HrirDataset d;
  d.sample_rate = 16000;
  d.ir_length = 1;
  std::vector<t::GridPoint> grid;
  for (int j = 0; j < 10; ++j) {
    for (int i = 0; i < 10; ++i) {
      const double az = -180.0 + 36.0 * i;
      const double el = -81.0 + 18.0 * j;
      d.entries.push_back({az, el, {1.0}, {1.0}});
      grid.push_back({az, el});
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uaz(-180.0, 180.0), uel(-90.0, 90.0);
  int agree = 0;
  for (int q = 0; q < 1000; ++q) {
    const double az = uaz(rng), el = uel(rng);
    if (hrtf::NearestHrirIndex(d, az, el) == t::BruteForceNearest(grid, az, el)) {
      ++agree;
    }
  }
  c.Expect(agree == 1000, std::to_string(agree) + "/1000 agree");
  c.Note(std::to_string(agree) + "/1000 agree");
}

void StaticHrtfRender(Checker& c) {
  hrtf::HrirDataset d;
  d.sample_rate = 16000;
  d.ir_length = 128;
  const Signal l = t::WhiteNoise(128, 21), r = t::WhiteNoise(128, 22);
  d.entries.push_back({-30.0, 0.0, t::WhiteNoise(128, 23), t::WhiteNoise(128, 24)});
  d.entries.push_back({0.0, 0.0, l, r});
  d.entries.push_back({30.0, 0.0, t::WhiteNoise(128, 25), t::WhiteNoise(128, 26)});
  const Signal s = t::WhiteNoise(32000, 27);
  const double z = 2.5;
  RenderConfig config;
  config.method = RenderMethod::kHrtf;
  const AudioBuffer out = hrtf::RenderSourceHrtf(
      AudioBuffer::Mono(16000, s), {scene::SpatialSample{0.0, 0.05, 0.0, z}},
      scene::CameraModel{}, d, config);
  const Signal wl = dsp::FftConvolve(s, l), wr = dsp::FftConvolve(s, r);
  if (out.num_frames() != wl.size()) {
    c.Expect(false, "length " + std::to_string(out.num_frames()));
    return;
  }
  double err = 0.0;
  for (std::size_t i = 0; i < wl.size(); ++i) {
    err += std::pow(out.channels[0][i] - wl[i] / z, 2) +
           std::pow(out.channels[1][i] - wr[i] / z, 2);
  }
  const double rms = std::sqrt(err / (2.0 * wl.size()));
  c.Expect(rms < 1e-6, "RMS error " + std::to_string(rms));
  std::ostringstream note;
  note << "RMS error " << rms;
  c.Note(note.str());
}

void Loudness(Checker& c) {
  for (int rate : {16000, 44100, 48000}) {
    const Signal n = t::SpeechShapedNoise(5 * rate, rate, 31);
    const AudioBuffer in = AudioBuffer::Stereo(rate, n, t::SpeechShapedNoise(5 * rate, rate, 32));
    const double lufs = MeasureLoudness(NormalizeLoudness(in, -23.0));
    c.Near(lufs, -23.0, 0.1, "normalized loudness at " + std::to_string(rate) + " Hz");
  }
  const Signal sine = t::Sine(5 * 48000, 997.0, 48000);
  const double full = MeasureLoudness(AudioBuffer::Stereo(48000, sine, sine));
  std::ostringstream note;
  note << "full-scale 997 Hz stereo sine measures " << full << " LUFS";
  c.Note(note.str());
  c.Near(full, -0.69, 0.1, "full-scale 997 Hz stereo sine");
}

void Metrics(Checker& c) {
  auto noise = [](std::uint64_t seed) {
    return AudioBuffer::Stereo(16000, t::WhiteNoise(16000, seed),
                               t::WhiteNoise(16000, seed + 5000));
  };
  for (int k = 0; k < 20; ++k) {
    const AudioBuffer a = noise(400 + 3 * k), b = noise(401 + 3 * k),
                      x = noise(402 + 3 * k);
    if (k < 5) {
      c.Near(metrics::StftDistance(a, a), 0.0, 1e-6, "STFT d(x,x)");
      c.Near(metrics::EnvDistance(a, a), 0.0, 1e-6, "ENV d(x,x)");
    }
    for (auto d : {+[](const AudioBuffer& p, const AudioBuffer& q) {
                     return metrics::StftDistance(p, q);
                   },
                   +[](const AudioBuffer& p, const AudioBuffer& q) {
                     return metrics::EnvDistance(p, q);
                   }}) {
      const double ab = d(a, b);
      c.Near(ab, d(b, a), 1e-9, "symmetry");
      c.Expect(d(a, x) <= ab + d(b, x) + 1e-9, "triangle inequality");
    }
  }
  const Signal s = t::Sine(16000, 440.0, 16000);
  Signal h(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) h[i] = 0.5 * s[i];
  const double env = metrics::EnvDistance(AudioBuffer::Stereo(16000, s, s),
                                          AudioBuffer::Stereo(16000, h, h));
  std::ostringstream note;
  note << "scaled-sine ENV " << env;
  c.Note(note.str());
  c.Near(env, 126.5, 2.0, "scaled-sine ENV distance");
}

// Runs the command-line binary; returns its exit status.
int Shell(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Quote(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

void EndToEnd(Checker& c) {
  t::TempDir dir;
  const std::string bin = Quote(SPATAUDIO_CLI_PATH);
  const int synth = Shell(bin + " scene-synth --sources 1 --duration 1 --preset static"
                                " --x -1 --seed 1234 --out-dir " + Quote(dir.path()));
  c.Expect(synth == 0, "scene-synth exit " + std::to_string(synth));
  const std::string render = bin + " render --method algo3d --scene " +
                             Quote(dir / "scene.json") + " --out ";
  c.Expect(Shell(render + Quote(dir / "a.wav")) == 0, "first render failed");
  c.Expect(Shell(render + Quote(dir / "b.wav")) == 0, "second render failed");
  if (!c.ok()) return;
  const AudioBuffer out = ReadWavFile(dir / "a.wav");
  const double left = t::Energy(out.channels[0]);
  const double right = t::Energy(out.channels[1]);
  const double rel_db = right > 0.0 ? 10.0 * std::log10(right / left)
                                    : -std::numeric_limits<double>::infinity();
  std::ostringstream note;
  note << "right/left energy " << rel_db << " dB";
  c.Note(note.str());
  c.Expect(left > 0.0, "left channel silent");
  c.Expect(rel_db < -80.0, "right channel too loud");
  c.Expect(ReadFileBytes(dir / "a.wav") == ReadFileBytes(dir / "b.wav"),
           "re-render differs");
}

void DefaultsAudit(Checker& c) {
  const RenderConfig r;
  c.Expect(r.sample_rate == 16000, "render rate");
  c.Expect(r.alpha == 0.3, "echo level");
  c.Expect(r.speed_of_sound == 343.0, "speed of sound");
  c.Expect(r.d_min_m == 0.1 && r.d_max_m == 5.0, "render distance range");
  c.Expect(r.stft.window_ms == 25.0 && r.stft.hop_ms == 10.0 &&
               r.stft.fft_size == 512,
           "render STFT");
  c.Expect(r.elevation_pivot_hz == 1000.0 && r.elevation_exponent == 1.5,
           "elevation curve");
  const scene::CameraModel cam;
  c.Expect(cam.d_min_m == 0.1 && cam.d_max_m == 5.0, "camera distance range");
  c.Expect(cam.g_min == 0.0 && cam.g_max == 255.0, "gray range");
  const metrics::EvaluationConfig e;
  c.Expect(e.sample_rate == 16000, "evaluation rate");
  c.Expect(e.target_lufs == -23.0, "evaluation loudness target");
  c.Expect(e.stft == dsp::StftParams{}, "evaluation STFT");
  const dsp::StftParams p;
  c.Expect(p.WindowLength(16000) == 400 && p.HopLength(16000) == 160,
           "window/hop samples");
  const Signal w = dsp::PeriodicHann(400);
  c.Near(w[0], 0.0, 1e-12, "Hann window start");
  c.Near(w[200], 1.0, 1e-12, "Hann window peak");

  // Zero-flag evaluate reports the same preprocessing.
  t::TempDir dir;
  const AudioBuffer a = AudioBuffer::Stereo(16000, t::WhiteNoise(16000, 9),
                                            t::WhiteNoise(16000, 10));
  WriteWavFile(dir / "a.wav", a, WavEncoding::kFloat32);
  const int code = Shell(Quote(SPATAUDIO_CLI_PATH) + " evaluate --ref " +
                         Quote(dir / "a.wav") + " --pred " + Quote(dir / "a.wav") +
                         " --out " + Quote(dir / "m.json"));
  c.Expect(code == 0, "evaluate exit " + std::to_string(code));
  if (code != 0) return;
  const auto bytes = ReadFileBytes(dir / "m.json");
  const auto j = nlohmann::json::parse(bytes.begin(), bytes.end());
  const auto& pre = j["preprocessing"];
  c.Expect(pre["sample_rate"] == 16000, "reported rate");
  c.Expect(pre["target_lufs"] == -23.0, "reported target");
  c.Expect(pre["stft"]["window_ms"] == 25.0 && pre["stft"]["hop_ms"] == 10.0 &&
               pre["stft"]["fft_size"] == 512 && pre["stft"]["window"] == "hann",
           "reported STFT");
}

}  // namespace
}  // namespace spataudio

int main() {
  using spataudio::Checker;
  using spataudio::Criterion;
  const std::vector<Criterion> criteria{
      {1, "closed-form mappings", 5.0, spataudio::ClosedFormMappings},
      {2, "STFT round trip", 10.0, spataudio::StftRoundTrip},
      {3, "FFT convolution equals direct convolution", 10.0,
       spataudio::ConvolutionEquivalence},
      {4, "nearest HRIR equals brute force", 2.0, spataudio::NearestNeighbour},
      {5, "static HRTF render equals whole-signal convolution", 5.0,
       spataudio::StaticHrtfRender},
      {6, "loudness normalization and calibration", 10.0, spataudio::Loudness},
      {7, "metric properties", 10.0, spataudio::Metrics},
      {8, "end-to-end hard-left render", 10.0, spataudio::EndToEnd},
      {9, "defaults audit", 10.0, spataudio::DefaultsAudit},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (secs >= cr.limit_s) {
      c.Expect(false, "took " + std::to_string(secs) + " s, limit " +
                          std::to_string(cr.limit_s) + " s");
    }
    if (!c.ok()) ++failed;
    std::printf("%s [%d] %s (%.2f s)%s\n", c.ok() ? "PASS" : "FAIL", cr.id,
                cr.title.c_str(), secs, c.Summary().c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
