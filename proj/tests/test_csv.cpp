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

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "subharm/csv.hpp"
#include "subharm/figures.hpp"

using namespace subharm;
using csv::format_number;

namespace {

std::vector<std::vector<double>> parse_rows(const std::string& text, std::string& header) {
  std::istringstream is(text);
  std::getline(is, header);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

const SweepGrid kGrid{0.0, 0.35, 50};

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
  CHECK(format_number(-2.25e-12) == "-2.25e-12");
  CHECK(format_number(123456789012.0) == "1.23456789e+11");
}

TEST_CASE("writer rejects ragged rows") {
  std::ostringstream os;
  csv::Writer w(os);
  w.header({"a", "b"});
  const double ok[] = {1.0, 2.0};
  w.row(ok);
  const double bad[] = {1.0};
  CHECK_THROWS(w.row(bad));
  CHECK(os.str() == "a,b\n1,2\n");
}

TEST_CASE("figure2 columns") {
  std::ostringstream os;
  figures::write_figure2(os, 0.8, {0.0, 0.25, 0.5}, {0.0, 0.3, 4});
  std::string header;
  const auto rows = parse_rows(os.str(), header);
  CHECK(header == "epsilon,n_gamma_c=0,n_gamma_c=0.25,n_gamma_c=0.5");
  REQUIRE(rows.size() == 4);
  for (const double v : rows[0]) CHECK(v == 0.0);
  CHECK(rows[3][0] == 0.3);
  CHECK(rows[3][1] == doctest::Approx(1.285714).epsilon(1e-6));
  CHECK(rows[3][3] == doctest::Approx(1.028571).epsilon(1e-6));
}

TEST_CASE("figure3 scan") {
  std::ostringstream os;
  figures::write_figure3(os, 0.8, 0.5, kGrid);
  std::string header;
  const auto rows = parse_rows(os.str(), header);
  CHECK(header == "epsilon,var_plus,var_minus,vacuum_level");
  REQUIRE(rows.size() == 50);
  CHECK(rows[0][1] == 2.625);
  CHECK(rows[0][2] == 2.625);
  for (const auto& r : rows) {
    CHECK(r[3] == 2.625);
    if (r[0] > 0.0) CHECK(r[1] < 2.625);
  }
}

TEST_CASE("figure3 at the caption point") {
  std::ostringstream os;
  figures::write_figure3(os, 0.8, 0.5, {0.0, 0.3, 2});
  std::string header;
  const auto rows = parse_rows(os.str(), header);
  CHECK(rows[1][1] == doctest::Approx(1.714286).epsilon(1e-6));
  CHECK(rows[1][2] == doctest::Approx(7.2).epsilon(1e-8));
}

TEST_CASE("figure4 scan") {
  std::ostringstream os;
  figures::write_figure4(os, 0.8, 0.5, kGrid);
  std::string header;
  const auto rows = parse_rows(os.str(), header);
  CHECK(header == "epsilon,S_interacting,S_bare");
  CHECK(rows[0][1] == 0.0);
  CHECK(rows[0][2] == 0.0);
  for (const auto& r : rows) {
    if (r[0] > 0.0) CHECK(r[1] < r[2]);
  }
  std::ostringstream point;
  figures::write_figure4(point, 0.8, 0.5, {0.0, 0.3, 2});
  const auto p = parse_rows(point.str(), header);
  CHECK(p[1][1] == doctest::Approx(0.346939).epsilon(1e-6));
  CHECK(p[1][2] == doctest::Approx(0.428571).epsilon(1e-6));
}

TEST_CASE("sweep point columns") {
  std::ostringstream os;
  figures::write_point(os, {0.3, 0.8, 0.5});
  std::string header;
  const auto rows = parse_rows(os.str(), header);
  CHECK(header ==
        "epsilon,n_a,n_b,mean_photon,var_plus,var_minus,vacuum_level,squeezing,commutator,"
        "uncertainty_bound,eta_a,eta_c,sigma_c");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][9] == doctest::Approx(2.4));
  CHECK(rows[0][10] == doctest::Approx(0.36));
}

TEST_CASE("figure output is byte-identical on repeat") {
  std::ostringstream a, b;
  figures::write_sweep(a, 0.8, 0.5, kGrid);
  figures::write_sweep(b, 0.8, 0.5, kGrid);
  CHECK(a.str() == b.str());
  CHECK(a.str().find('\r') == std::string::npos);
}

TEST_CASE("formula listing names each figure's ingredients") {
  CHECK(figures::formulas_used("figure2").find("mode occupations") != std::string::npos);
  CHECK(figures::formulas_used("figure4").find("squeezing") != std::string::npos);
  CHECK(figures::formulas_used("simulate").empty());
}
