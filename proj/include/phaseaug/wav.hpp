// Copyright 2026 The phaseaug Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <filesystem>

#include "phaseaug/stft.hpp"

namespace phaseaug {

enum class WavEncoding { pcm16, float32 };

struct WavFile {
  Signal signal;
  WavEncoding encoding = WavEncoding::pcm16;
};

// Reads a mono RIFF/WAVE file (16-bit integer PCM or 32-bit IEEE float).
// 16-bit samples decode by division with 32768. Multi-channel or other
// encodings are rejected with std::runtime_error.
WavFile read_wav(const std::filesystem::path& path);

// Writes mono WAV. pcm16 quantizes with round-half-away-from-zero and
// clips to [-32768, 32767]; float32 round-trips float-precision data
// losslessly.
void write_wav(const std::filesystem::path& path, const Signal& signal,
               WavEncoding encoding);

}  // namespace phaseaug
