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

#ifndef SRSEARCH_ERRORS_H_
#define SRSEARCH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srsearch {

// Malformed container or document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input using a codec or feature we do not read.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside its documented domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shapes or lengths that must agree do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The out-of-process bridge could not be started or did not complete the
// handshake.
class BridgeUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator or verifier failed while producing candidate `index`.
class CandidateError : public std::runtime_error {
 public:
  CandidateError(std::size_t index, const std::string& what)
      : std::runtime_error("candidate " + std::to_string(index) + ": " + what),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace srsearch

#endif  // SRSEARCH_ERRORS_H_
