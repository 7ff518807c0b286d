#pragma once

#include <stdexcept>
#include <string>

#include "anc/signal.hpp"

namespace anc {

enum class WavErrorCode {
  not_found,
  bad_header,
  unsupported_format,
  truncated,
  io_failure,
};

class WavError : public std::runtime_error {
 public:
  WavError(WavErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  WavErrorCode code() const { return code_; }

 private:
  WavErrorCode code_;
};

// Reads a 16-bit PCM RIFF/WAVE file (mono or stereo; stereo is averaged down
// to mono).  Codes map to [-1, 1) by division by 32768; sample_rate_hz comes
// from the header.
SignalBuffer load_wav(const std::string& path);

// Writes mono 16-bit PCM, little-endian.  Samples are clipped to
// [-1, 1 - 2^-15] before quantization; non-finite samples are rejected.
void write_wav(const SignalBuffer& buf, const std::string& path);

}  // namespace anc
