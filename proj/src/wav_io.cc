// Copyright 2026 The srsearch Authors.
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

#include "srsearch/wav_io.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "srsearch/errors.h"

namespace srsearch {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t pos() const { return pos_; }

  void Need(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw FormatError(std::string("truncated WAV: ") + what);
    }
  }
  std::string_view Tag() {
    Need(4, "chunk tag");
    std::string_view tag(reinterpret_cast<const char*>(&bytes_[pos_]), 4);
    pos_ += 4;
    return tag;
  }
  std::uint16_t U16() {
    Need(2, "u16");
    std::uint16_t v = bytes_[pos_] | (bytes_[pos_ + 1] << 8);
    pos_ += 2;
    return v;
  }
  std::uint32_t U32() {
    Need(4, "u32");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | bytes_[pos_ + i];
    pos_ += 4;
    return v;
  }
  void Skip(std::size_t n) {
    pos_ += std::min(n, remaining());
  }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back(v >> 8);
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xFF);
}

void PutTag(std::vector<std::uint8_t>& out, std::string_view tag) {
  out.insert(out.end(), tag.begin(), tag.end());
}

}  // namespace

AudioBuffer LoadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  ByteReader reader(bytes);
  if (reader.Tag() != "RIFF") throw FormatError("missing RIFF tag");
  reader.U32();
  if (reader.Tag() != "WAVE") throw FormatError("missing WAVE tag");

  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;
  while (reader.remaining() >= 8) {
    const std::string_view tag = reader.Tag();
    const std::uint32_t chunk_size = reader.U32();
    if (tag == "fmt ") {
      if (chunk_size < 16) throw FormatError("fmt chunk too short");
      reader.Need(16, "fmt chunk");
      const std::size_t start = reader.pos();
      format = reader.U16();
      channels = reader.U16();
      rate = reader.U32();
      reader.U32();  // byte rate
      reader.U16();  // block align
      bits = reader.U16();
      if (format == kFormatExtensible) {
        reader.Need(10, "extensible fmt");
        reader.U16();  // cbSize
        reader.U16();  // valid bits
        reader.U32();  // channel mask
        format = reader.U16();  // leading bytes of the subformat GUID
      }
      const std::size_t consumed = reader.pos() - start;
      if (consumed < chunk_size) reader.Skip(chunk_size - consumed);
      reader.Skip(chunk_size & 1);
      have_fmt = true;
    } else if (tag == "data") {
      if (!have_fmt) throw FormatError("data chunk before fmt chunk");
      if (channels == 0 || rate == 0) throw FormatError("bad fmt chunk");
      const bool pcm16 = format == kFormatPcm && bits == 16;
      const bool float32 = format == kFormatFloat && bits == 32;
      if (!pcm16 && !float32) {
        throw UnsupportedError("unsupported WAV codec: format " +
                               std::to_string(format) + ", " +
                               std::to_string(bits) + " bits");
      }
      const std::size_t frame_bytes = channels * (bits / 8);
      const std::size_t available = std::min<std::size_t>(
          chunk_size, reader.remaining());
      const std::size_t frames = available / frame_bytes;
      const std::uint8_t* data = bytes.data() + reader.pos();

      AudioBuffer out;
      out.sample_rate_hz = static_cast<int>(rate);
      out.samples.resize(frames);
      for (std::size_t i = 0; i < frames; ++i) {
        double sum = 0.0;
        for (std::size_t c = 0; c < channels; ++c) {
          const std::uint8_t* p = data + i * frame_bytes + c * (bits / 8);
          if (pcm16) {
            const auto v =
                static_cast<std::int16_t>(p[0] | (p[1] << 8));
            sum += v / 32768.0;
          } else {
            const std::uint32_t u = p[0] | (p[1] << 8) | (p[2] << 16) |
                                    (static_cast<std::uint32_t>(p[3]) << 24);
            sum += std::bit_cast<float>(u);
          }
        }
        out.samples[i] = static_cast<float>(channels == 1 ? sum
                                                          : sum / channels);
      }
      return out;
    } else {
      reader.Skip(chunk_size + (chunk_size & 1));
    }
  }
  throw FormatError("no data chunk in " + path.string());
}

void SaveWav(const AudioBuffer& buffer, const std::filesystem::path& path,
             WavCodec codec) {
  CheckAudio(buffer);
  const bool pcm16 = codec == WavCodec::kPcm16;
  const std::uint16_t bits = pcm16 ? 16 : 32;
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(buffer.size() * (bits / 8));
  const std::uint32_t fmt_bytes = pcm16 ? 16 : 18;
  const std::uint32_t fact_bytes = pcm16 ? 0 : 12;

  std::vector<std::uint8_t> out;
  out.reserve(44 + 14 + data_bytes);
  PutTag(out, "RIFF");
  PutU32(out, 4 + (8 + fmt_bytes) + fact_bytes + (8 + data_bytes));
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, fmt_bytes);
  PutU16(out, pcm16 ? kFormatPcm : kFormatFloat);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate_hz));
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate_hz) * (bits / 8));
  PutU16(out, bits / 8);
  PutU16(out, bits);
  if (!pcm16) {
    PutU16(out, 0);  // cbSize
    PutTag(out, "fact");
    PutU32(out, 4);
    PutU32(out, static_cast<std::uint32_t>(buffer.size()));
  }
  PutTag(out, "data");
  PutU32(out, data_bytes);
  for (const float s : buffer.samples) {
    if (pcm16) {
      const double clamped = std::clamp(static_cast<double>(s), -1.0,
                                        32767.0 / 32768.0);
      const auto q = static_cast<std::int16_t>(std::lround(clamped * 32768.0));
      PutU16(out, static_cast<std::uint16_t>(q));
    } else {
      PutU32(out, std::bit_cast<std::uint32_t>(s));
    }
  }
  if (data_bytes & 1) out.push_back(0);

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path.string());
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed for " + path.string());
}

}  // namespace srsearch
