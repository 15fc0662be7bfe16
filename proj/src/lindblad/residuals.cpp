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

#include "subharm/lindblad/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace subharm::lindblad {

namespace {

class EquationBuilder {
 public:
  std::size_t op(const std::string& label, const SparseOperator& o) {
    const auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const std::size_t i = set_.operators.size();
    set_.operators.push_back({label, o});
    index_.emplace(label, i);
    return i;
  }

  void add(std::string name, std::size_t lhs, std::vector<std::pair<cplx, std::size_t>> rhs,
           cplx constant = {}) {
    set_.equations.push_back({std::move(name), lhs, std::move(rhs), constant});
  }

  MomentEquationSet take() { return std::move(set_); }

 private:
  MomentEquationSet set_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

MomentEquationSet exact_moment_equations(const OperatorSet& ops, const ModelParams& p, double g) {
  const double k = p.kappa;
  const double e = p.epsilon;
  const auto& a = ops.a;
  const auto& b = ops.b;
  const auto ad = a.adjoint();
  const auto bd = b.adjoint();
  const auto& sa = ops.sigma_a;
  const auto& sb = ops.sigma_b;
  const auto& sc = ops.sigma_c;
  const auto sad = sa.adjoint();
  const auto sbd = sb.adjoint();

  EquationBuilder eb;
  const auto A = eb.op("a", a);
  const auto B = eb.op("b", b);
  const auto AD = eb.op("adag", ad);
  const auto BD = eb.op("bdag", bd);
  const auto SA = eb.op("sigma_a", sa);
  const auto SB = eb.op("sigma_b", sb);
  const auto SC = eb.op("sigma_c", sc);
  const auto EA = eb.op("eta_a", ops.eta_a);
  const auto EB = eb.op("eta_b", ops.eta_b);
  const auto EC = eb.op("eta_c", ops.eta_c);

  const auto NA = eb.op("adag_a", ad * a);
  const auto AA = eb.op("a_adag", a * ad);
  const auto NB = eb.op("bdag_b", bd * b);
  const auto BB = eb.op("b_bdag", b * bd);
  const auto AB = eb.op("ab", a * b);
  const auto BA = eb.op("ba", b * a);
  const auto ADBD = eb.op("adag_bdag", ad * bd);
  const auto BDAD = eb.op("bdag_adag", bd * ad);
  const auto ASQ = eb.op("a_sq", a * a);
  const auto BSQ = eb.op("b_sq", b * b);
  const auto ADSQ = eb.op("adag_sq", ad * ad);
  const auto ABD = eb.op("a_bdag", a * bd);
  const auto BDA = eb.op("bdag_a", bd * a);
  const auto BAD = eb.op("b_adag", b * ad);
  const auto ADB = eb.op("adag_b", ad * b);

  // atom-field mixtures, named in operator order
  const auto SAD_A = eb.op("sigma_adag_a", sad * a);
  const auto AD_SA = eb.op("adag_sigma_a", ad * sa);
  const auto A_SAD = eb.op("a_sigma_adag", a * sad);
  const auto SA_AD = eb.op("sigma_a_adag", sa * ad);
  const auto SBD_B = eb.op("sigma_bdag_b", sbd * b);
  const auto BD_SB = eb.op("bdag_sigma_b", bd * sb);
  const auto B_SBD = eb.op("b_sigma_bdag", b * sbd);
  const auto SB_BD = eb.op("sigma_b_bdag", sb * bd);
  const auto SA_B = eb.op("sigma_a_b", sa * b);
  const auto A_SB = eb.op("a_sigma_b", a * sb);
  const auto B_SA = eb.op("b_sigma_a", b * sa);
  const auto SB_A = eb.op("sigma_b_a", sb * a);
  const auto A_SA = eb.op("a_sigma_a", a * sa);
  const auto SA_A = eb.op("sigma_a_a", sa * a);
  const auto B_SB = eb.op("b_sigma_b", b * sb);
  const auto SB_B = eb.op("sigma_b_b", sb * b);
  const auto SAD_B = eb.op("sigma_adag_b", sad * b);
  const auto AD_SB = eb.op("adag_sigma_b", ad * sb);
  const auto B_SAD = eb.op("b_sigma_adag", b * sad);
  const auto SB_AD = eb.op("sigma_b_adag", sb * ad);
  const auto EBA_A = eb.op("(eta_b-eta_a)_a", (ops.eta_b - ops.eta_a) * a);
  const auto BD_SC = eb.op("bdag_sigma_c", bd * sc);
  const auto AD_SC = eb.op("adag_sigma_c", ad * sc);
  const auto ECB_B = eb.op("(eta_c-eta_b)_b", (ops.eta_c - ops.eta_b) * b);

  const double hk = 0.5 * k;
  eb.add("d<a>/dt", A, {{-hk, A}, {-e, BD}, {-g, SA}});
  eb.add("d<b>/dt", B, {{-hk, B}, {-e, AD}, {-g, SB}});
  eb.add("d<adag a>/dt", NA, {{-k, NA}, {-e, BA}, {-e, ADBD}, {-g, SAD_A}, {-g, AD_SA}});
  eb.add("d<a adag>/dt", AA, {{-k, AA}, {-e, AB}, {-e, BDAD}, {-g, A_SAD}, {-g, SA_AD}}, k);
  eb.add("d<bdag b>/dt", NB, {{-k, NB}, {-e, AB}, {-e, BDAD}, {-g, SBD_B}, {-g, BD_SB}});
  eb.add("d<b bdag>/dt", BB, {{-k, BB}, {-e, BA}, {-e, ADBD}, {-g, B_SBD}, {-g, SB_BD}}, k);
  eb.add("d<ab>/dt", AB, {{-k, AB}, {-e, NA}, {-e, NB}, {-g, SA_B}, {-g, A_SB}}, -e);
  eb.add("d<ba>/dt", BA, {{-k, BA}, {-e, NA}, {-e, NB}, {-g, B_SA}, {-g, SB_A}}, -e);
  eb.add("d<a^2>/dt", ASQ, {{-k, ASQ}, {-e, ABD}, {-e, BDA}, {-g, A_SA}, {-g, SA_A}});
  eb.add("d<b^2>/dt", BSQ, {{-k, BSQ}, {-e, BAD}, {-e, ADB}, {-g, B_SB}, {-g, SB_B}});
  eb.add("d<adag b>/dt", ADB, {{-k, ADB}, {-e, ADSQ}, {-e, BSQ}, {-g, SAD_B}, {-g, AD_SB}});
  eb.add("d<b adag>/dt", BAD, {{-k, BAD}, {-e, ADSQ}, {-e, BSQ}, {-g, B_SAD}, {-g, SB_AD}});

  eb.add("d<sigma_a>/dt", SA, {{g, EBA_A}, {g, BD_SC}});
  eb.add("d<sigma_b>/dt", SB, {{-g, AD_SC}, {g, ECB_B}});
  eb.add("d<sigma_c>/dt", SC, {{g, SB_A}, {-g, SA_B}});
  eb.add("d<eta_a>/dt", EA, {{g, SAD_A}, {g, AD_SA}});
  eb.add("d<eta_b>/dt", EB, {{g, SBD_B}, {g, BD_SB}, {-g, SAD_A}, {-g, AD_SA}});
  eb.add("d<eta_c>/dt", EC, {{-g, SBD_B}, {-g, BD_SB}});
  return eb.take();
}

double ResidualReport::max() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.max_residual);
  return m;
}

ResidualReport moment_residuals(const Trajectory& traj, const MomentEquationSet& set,
                                std::size_t stride) {
  ResidualReport report;
  if (stride == 0 || traj.times.size() < 2) return report;
  const double h = traj.times[stride < traj.times.size() ? stride : 1] - traj.times[0];

  // uniform prefix at the requested stride
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < traj.times.size(); i += stride) {
    const double expected = traj.times[0] + static_cast<double>(idx.size()) * h;
    if (std::abs(traj.times[i] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) break;
    idx.push_back(i);
  }
  report.spacing = h;
  report.samples = idx.size();
  if (idx.size() < 3) return report;

  for (const auto& eq : set.equations) {
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < idx.size(); ++j) {
      const auto& prev = traj.values[idx[j - 1]];
      const auto& mid = traj.values[idx[j]];
      const auto& next = traj.values[idx[j + 1]];
      const cplx lhs = (next[eq.lhs] - prev[eq.lhs]) / (2.0 * h);
      cplx rhs = eq.constant;
      for (const auto& [c, i] : eq.rhs) rhs += c * mid[i];
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    report.entries.push_back({eq.name, worst});
  }
  return report;
}

}  // namespace subharm::lindblad
