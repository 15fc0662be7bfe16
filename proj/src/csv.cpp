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

#include "subharm/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace subharm::csv {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 9);
  return {buf.data(), res.ptr};
}

void Writer::header(const std::vector<std::string>& names) {
  columns_ = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) os_ << ',';
    os_ << names[i];
  }
  os_ << '\n';
}

void Writer::row(std::span<const double> values) {
  if (columns_ != 0 && values.size() != columns_) {
    throw std::logic_error("csv row has " + std::to_string(values.size()) + " fields, header has " +
                           std::to_string(columns_));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os_ << ',';
    os_ << format_number(values[i]);
  }
  os_ << '\n';
}

}  // namespace subharm::csv
