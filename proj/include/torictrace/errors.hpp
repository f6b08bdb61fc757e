// Copyright 2026 The torictrace Authors. All Rights Reserved.
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
#include <vector>

namespace torictrace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad text, overlapping labels, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The relation listing contains a directed cycle.
class MalformedPosetError : public InputError {
 public:
  MalformedPosetError(const std::string& what, std::vector<std::string> cycle)
      : InputError(what), cycle_(std::move(cycle)) {}

  /// Labels along the cycle; the first label is repeated at the end.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class IncomparableError : public InputError {
 public:
  using InputError::InputError;
};

/// A theorem hypothesis or function precondition on numeric arguments fails.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Singular ray or normal matrix.
class DegenerateConeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Degree below the truncation threshold of the Segre trace formula.
class ThresholdError : public DomainError {
 public:
  ThresholdError(const std::string& what, long long threshold)
      : DomainError(what), threshold_(threshold) {}
  long long threshold() const { return threshold_; }

 private:
  long long threshold_;
};

/// An enumeration or search would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace torictrace
