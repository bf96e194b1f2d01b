// Copyright 2026 The Camocodec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace camocodec {

// Every failure mode named by the library maps to one code, so callers can
// distinguish e.g. a truncated payload from a bad magic number.
enum class errc {
  file_not_found,
  bad_magic,
  truncated,
  bad_maxval,
  unsupported_format,
  invalid_argument,
  dimension_mismatch,
  invalid_config,
  clip_too_short,
  malformed_csv,
  unknown_split,
  payload_mismatch,
  missing_artifact,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::file_not_found: return "file not found";
    case errc::bad_magic: return "bad magic";
    case errc::truncated: return "truncated";
    case errc::bad_maxval: return "bad maxval";
    case errc::unsupported_format: return "unsupported format";
    case errc::invalid_argument: return "invalid argument";
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::invalid_config: return "invalid config";
    case errc::clip_too_short: return "clip too short";
    case errc::malformed_csv: return "malformed csv";
    case errc::unknown_split: return "unknown split";
    case errc::payload_mismatch: return "payload mismatch";
    case errc::missing_artifact: return "missing artifact";
    case errc::io_error: return "io error";
  }
  return "unknown";
}

}  // namespace camocodec
