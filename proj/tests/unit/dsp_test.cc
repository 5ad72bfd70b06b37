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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "spataudio/dsp/fft.h"
#include "spataudio/dsp/signal_ops.h"
#include "spataudio/dsp/stft.h"
#include "support/error_matchers.h"
#include "support/oracles.h"

namespace spataudio::dsp {
namespace {

using ::spataudio::testing::KindOf;

constexpr int kRate = 16000;

TEST(StftTest, DefaultGeometry) {
  const StftParams p;
  EXPECT_EQ(p.WindowLength(kRate), 400);
  EXPECT_EQ(p.HopLength(kRate), 160);
  EXPECT_EQ(FullFrameCount(16000, 400, 160), 98u);
  const Spectrogram s = Stft(std::vector<double>(16000, 0.0), p, kRate);
  EXPECT_EQ(s.num_bins(), 257u);
  EXPECT_EQ(s.num_frames(), PaddedFrameCount(16000, 400, 160));
  EXPECT_EQ(s.num_frames(), 101u);
}

TEST(StftTest, ZerosGiveZeroSpectrum) {
  const Spectrogram s = Stft(std::vector<double>(3200, 0.0), StftParams{}, kRate);
  for (const auto& frame : s.frames) {
    for (const Complex& c : frame) EXPECT_EQ(std::abs(c), 0.0);
  }
}

TEST(StftTest, DcConcentratesInBinZeroAndIsConstantInInterior) {
  const Spectrogram s = Stft(std::vector<double>(4000, 1.0), StftParams{}, kRate);
  // Window sum of a periodic Hann of length 400 is 200.
  for (std::size_t f = 2; f + 2 < s.num_frames(); ++f) {
    EXPECT_NEAR(s.frames[f][0].real(), 200.0, 1e-9);
    EXPECT_NEAR(s.frames[f][0].imag(), 0.0, 1e-9);
  }
}

TEST(StftTest, MatchesDirectDft) {
  const auto x = testing::WhiteNoise(2000, 11);
  const Spectrogram s = Stft(x, StftParams{}, kRate);
  const auto ref = testing::NaiveStft(x, 400, 160, 512);
  ASSERT_EQ(s.num_frames(), ref.size());
  double max_err = 0.0, max_mag = 0.0;
  for (std::size_t f = 0; f < ref.size(); ++f) {
    for (std::size_t k = 0; k < ref[f].size(); ++k) {
      max_err = std::max(max_err, std::abs(s.frames[f][k] - ref[f][k]));
      max_mag = std::max(max_mag, std::abs(ref[f][k]));
    }
  }
  EXPECT_LT(max_err, 1e-9 * max_mag);
}

TEST(StftTest, ParsevalPerFrame) {
  const auto x = testing::WhiteNoise(4000, 12);
  const Spectrogram s = Stft(x, StftParams{}, kRate);
  const auto w = PeriodicHann(400);
  const std::size_t n = 512;
  for (std::size_t f : {3u, 10u, 20u}) {
    double time = 0.0;
    for (std::size_t i = 0; i < 400; ++i) {
      const double v = x[f * 160 + i - 200] * w[i];
      time += v * v;
    }
    double freq = std::norm(s.frames[f][0]) + std::norm(s.frames[f][n / 2]);
    for (std::size_t k = 1; k < n / 2; ++k) freq += 2.0 * std::norm(s.frames[f][k]);
    EXPECT_NEAR(freq / n, time, 0.01 * time);
  }
}

TEST(StftTest, Linearity) {
  const auto a = testing::WhiteNoise(3000, 1);
  const auto b = testing::WhiteNoise(3000, 2);
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = 2.0 * a[i] - 0.5 * b[i];
  const Spectrogram sa = Stft(a, StftParams{}, kRate);
  const Spectrogram sb = Stft(b, StftParams{}, kRate);
  const Spectrogram sc = Stft(c, StftParams{}, kRate);
  for (std::size_t f = 0; f < sc.num_frames(); ++f) {
    for (std::size_t k = 0; k < sc.num_bins(); ++k) {
      EXPECT_NEAR(std::abs(sc.frames[f][k] -
                           (2.0 * sa.frames[f][k] - 0.5 * sb.frames[f][k])),
                  0.0, 1e-10);
    }
  }
}

TEST(StftTest, RoundTripReconstructs) {
  const auto x = testing::WhiteNoise(16000, 3);
  const auto y = Istft(Stft(x, StftParams{}, kRate));
  ASSERT_EQ(y.size(), x.size());
  double max_err = 0.0;
  for (std::size_t i = 200; i + 200 < x.size(); ++i) {
    max_err = std::max(max_err, std::abs(x[i] - y[i]));
  }
  EXPECT_LT(max_err, 1e-6);
}

TEST(StftTest, RejectsBadInput) {
  EXPECT_EQ(KindOf([] { Stft(std::vector<double>{}, StftParams{}, kRate); }),
            ErrorKind::kValidation);
  StftParams bad;
  bad.fft_size = 256;
  EXPECT_EQ(KindOf([&] { bad.Validate(kRate); }), ErrorKind::kConfiguration);
  Spectrogram s = Stft(std::vector<double>(800, 0.1), StftParams{}, kRate);
  s.frames.pop_back();
  EXPECT_EQ(KindOf([&] { Istft(s); }), ErrorKind::kFormat);
}

TEST(EnvelopeTest, SineHasUnitEnvelope) {
  const auto x = testing::Sine(16000, 440.0, kRate);
  const auto env = Envelope(x);
  ASSERT_EQ(env.size(), x.size());
  for (std::size_t i = 800; i + 800 < env.size(); ++i) {
    ASSERT_NEAR(env[i], 1.0, 0.01) << i;
  }
  const auto half = Envelope(testing::Sine(16000, 440.0, kRate, 0.5));
  for (std::size_t i = 800; i + 800 < half.size(); ++i) {
    ASSERT_NEAR(half[i], 0.5 * env[i], 1e-9);
  }
}

TEST(EnvelopeTest, ConstantSignal) {
  const auto env = Envelope(std::vector<double>(4000, 0.7));
  for (std::size_t i = 400; i + 400 < env.size(); ++i) {
    ASSERT_NEAR(env[i], 0.7, 0.007);
  }
}

TEST(FftConvolveTest, ShiftAndIdentity) {
  const auto y = FftConvolve(std::vector<double>{1, 0, 0},
                             std::vector<double>{0, 1});
  ASSERT_EQ(y.size(), 4u);
  const std::vector<double> expect{0, 1, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(y[i], expect[i], 1e-12);
  const auto x = testing::WhiteNoise(100, 4);
  const auto id = FftConvolve(x, std::vector<double>{1.0});
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(id[i], x[i], 1e-12);
  EXPECT_EQ(KindOf([] { FftConvolve(std::vector<double>{}, std::vector<double>{1}); }),
            ErrorKind::kValidation);
}

TEST(FftConvolveTest, MatchesDirectAndCommutes) {
  const auto a = testing::WhiteNoise(777, 5);
  const auto b = testing::WhiteNoise(129, 6);
  const auto got = FftConvolve(a, b);
  const auto ref = testing::DirectConvolve(a, b);
  const auto swapped = FftConvolve(b, a);
  ASSERT_EQ(got.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    ASSERT_NEAR(got[i], ref[i], 1e-9);
    ASSERT_NEAR(swapped[i], got[i], 1e-12);
  }
}

TEST(FftTest, NextPowerOfTwo) {
  EXPECT_EQ(NextPowerOfTwo(1), 1u);
  EXPECT_EQ(NextPowerOfTwo(3), 4u);
  EXPECT_EQ(NextPowerOfTwo(512), 512u);
  EXPECT_EQ(NextPowerOfTwo(513), 1024u);
}

}  // namespace
}  // namespace spataudio::dsp
