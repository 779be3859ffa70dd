// Copyright 2026 The sdcircle Authors. All Rights Reserved.
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

#ifndef SDCIRCLE_ERRORS_H_
#define SDCIRCLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sdcircle {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer samples than 2K+1 for a K-bandlimited signal.
class UndersampledError : public Error {
 public:
  using Error::Error;
};

// Second-order filter requested with fewer than two taps.
class InvalidTabCount : public Error {
 public:
  using Error::Error;
};

// Feedback filter violating h_0 = 0, the unit tap sum, or the finite-support
// condition on the derived g filter.
class InvalidFilter : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// The shifted samples of a second-order update left the stable region.
class StabilityLost : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdcircle

#endif  // SDCIRCLE_ERRORS_H_
