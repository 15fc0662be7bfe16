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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace subharm::csv {

/// General format at 9 significant digits with a '.' decimal
/// point, no locale. Negative zero prints as 0.
std::string format_number(double v);

/// Writes comma-separated rows terminated by '\n'.
class Writer {
 public:
  explicit Writer(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& names);
  void row(std::span<const double> values);

 private:
  std::ostream& os_;
  std::size_t columns_ = 0;
};

}  // namespace subharm::csv
