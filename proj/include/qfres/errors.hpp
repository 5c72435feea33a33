// Copyright 2026 The qfres Authors
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

namespace qfres {

/// Invalid argument to a library operation (bad index, bad ñ, shape mismatch).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A register would exceed the configured simulation cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Signal cannot be amplitude encoded (negative or all-zero values).
class EncodingError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// File could not be read, parsed or written.
class IoError : public std::runtime_error {
  public:
    IoError(const std::string &path, const std::string &what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

/// Inconsistent command-line configuration.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qfres
