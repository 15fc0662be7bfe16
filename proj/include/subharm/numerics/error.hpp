// Copyright 2026 The subharm Authors
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

namespace subharm::numerics {

enum class NumericsErrc {
  SingularMatrix,
  DimensionMismatch,
  NonFiniteState,
  InvalidArgument,
};

class NumericsError : public std::runtime_error {
 public:
  NumericsError(NumericsErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  [[nodiscard]] NumericsErrc code() const noexcept { return code_; }

 private:
  NumericsErrc code_;
};

}  // namespace subharm::numerics
