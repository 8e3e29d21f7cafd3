/* Copyright 2026 The Smelt Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SMELT_ERRORS_H_
#define SMELT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smelt {

// Base class for every operational failure. The CLI maps all of these to
// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyTableError : public Error {
 public:
  using Error::Error;
};

class MalformedCsvError : public Error {
 public:
  MalformedCsvError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class UnknownSmellError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string field)
      : Error(what), field_(std::move(field)) {}

  // Name of the offending config field, empty when the error is not tied to
  // one field (e.g. the document does not parse).
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace smelt

#endif  // SMELT_ERRORS_H_
