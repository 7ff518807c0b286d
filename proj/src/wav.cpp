#include "anc/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace anc {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

SignalBuffer load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WavError(WavErrorCode::not_found, "cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw WavError(WavErrorCode::io_failure, "read failed: " + path);

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw WavError(WavErrorCode::bad_header, "not a RIFF/WAVE file: " + path);
  }

  bool have_fmt = false;
  std::uint16_t channels = 0;
  std::uint16_t bits = 0;
  std::uint32_t rate = 0;
  std::size_t data_off = 0;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t chunk_len = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (body + 16 > bytes.size()) {
        throw WavError(WavErrorCode::bad_header, "fmt chunk too short: " + path);
      }
      const std::uint16_t format = read_u16(chunk + 8);
      channels = read_u16(chunk + 10);
      rate = read_u32(chunk + 12);
      bits = read_u16(chunk + 22);
      if (format != 1) {
        throw WavError(WavErrorCode::unsupported_format,
                       "not PCM (format code " + std::to_string(format) + "): " + path);
      }
      if (bits != 16) {
        throw WavError(WavErrorCode::unsupported_format,
                       "not 16-bit (" + std::to_string(bits) + " bits): " + path);
      }
      if (channels != 1 && channels != 2) {
        throw WavError(WavErrorCode::unsupported_format,
                       std::to_string(channels) + " channels (want mono or stereo): " + path);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (body + chunk_len > bytes.size()) {
        throw WavError(WavErrorCode::truncated, "data chunk truncated: " + path);
      }
      data_off = body;
      data_len = chunk_len;
      break;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_off == 0) {
    throw WavError(WavErrorCode::bad_header, "missing fmt/data chunk: " + path);
  }

  const std::size_t frame_bytes = 2u * channels;
  const std::size_t n_frames = data_len / frame_bytes;
  SignalBuffer out;
  out.sample_rate_hz = static_cast<double>(rate);
  out.samples.resize(n_frames);
  const unsigned char* p = bytes.data() + data_off;
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const std::int16_t code =
          static_cast<std::int16_t>(read_u16(p + i * frame_bytes + 2u * c));
      acc += static_cast<double>(code) / 32768.0;
    }
    out.samples[i] = acc / channels;
  }
  return out;
}

void write_wav(const SignalBuffer& buf, const std::string& path) {
  for (double v : buf.samples) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("write_wav: non-finite sample");
    }
  }
  constexpr double kMax = 1.0 - 1.0 / 32768.0;
  const std::uint32_t n = static_cast<std::uint32_t>(buf.samples.size());
  const std::uint32_t data_bytes = 2u * n;
  const std::uint32_t rate = static_cast<std::uint32_t>(buf.sample_rate_hz);

  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, rate);
  put_u32(out, rate * 2);  // byte rate
  put_u16(out, 2);         // block align
  put_u16(out, 16);        // bits per sample
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (double v : buf.samples) {
    const double clipped = std::clamp(v, -1.0, kMax);
    const auto code = static_cast<std::int16_t>(std::llround(clipped * 32768.0));
    put_u16(out, static_cast<std::uint16_t>(code));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw WavError(WavErrorCode::io_failure, "cannot open for write: " + path);
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw WavError(WavErrorCode::io_failure, "write failed: " + path);
}

}  // namespace anc
