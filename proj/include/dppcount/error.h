// Copyright 2026 The Authors.
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

#ifndef DPPCOUNT_ERROR_H_
#define DPPCOUNT_ERROR_H_

#include <stdexcept>
#include <string>

namespace dppcount {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, non-symmetric matrices, unparsable files,
// arguments outside their documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A matrix that was required to be positive semi-definite is not.
class NotPsd : public InvalidArgument {
 public:
  NotPsd() : InvalidArgument("matrix not PSD") {}
  explicit NotPsd(const std::string& what) : InvalidArgument(what) {}
};

// An exhaustive enumeration would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap_name, std::size_t cap, std::size_t actual)
      : Error("enumeration cap exceeded: " + cap_name + " = " +
              std::to_string(actual) + " > " + std::to_string(cap)),
        cap_name_(cap_name) {}

  const std::string& cap_name() const { return cap_name_; }

 private:
  std::string cap_name_;
};

}  // namespace dppcount

#endif  // DPPCOUNT_ERROR_H_
