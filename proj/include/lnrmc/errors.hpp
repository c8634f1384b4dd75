// Copyright 2026 the lnrmc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LNRMC_ERRORS_HPP_
#define LNRMC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lnrmc {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file headers, bad magic bytes, corrupt bitstream syntax.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Image dimensions that are not macroblock-aligned.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Truncated payloads, reads past the end of a stream.
class LengthError : public Error {
 public:
  using Error::Error;
};

// Non-finite values where finite ones are required.
class ValueError : public Error {
 public:
  using Error::Error;
};

// API contract violations (bad block size, mismatched layouts).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid encoder configuration (e.g. gradient-based mode without a usable
// gradient).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Empty or unusable numeric ranges (e.g. disjoint distortion intervals).
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace lnrmc

#endif  // LNRMC_ERRORS_HPP_
