// Copyright 2026 The fermko Authors
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

#include "fermko/chemostat/chemostat.h"

namespace fermko::chemostat {

void ProcessSpec::check() const {
  if (!(c_S_feed_max > 0.0)) throw std::invalid_argument("c_S_feed_max must be positive");
  if (!(M_S > 0.0) || !(M_P > 0.0)) throw std::invalid_argument("molar masses must be positive");
  if (!(f > 0.0) || f > 1.0) throw std::invalid_argument("growth floor fraction must be in (0, 1]");
}

Concentrations steady_state_concentrations(double v_bio, double v_S, double v_P, double c_S,
                                           double c_S_feed, const ProcessSpec& spec) {
  if (!(v_S > 0.0)) throw ChemostatError("no substrate uptake (v_S <= 0)");
  if (!(v_bio > 0.0)) throw ChemostatError("washout (v_bio <= 0)");
  if (c_S > c_S_feed) throw ChemostatError("substrate concentration exceeds the feed");
  Concentrations out;
  out.c_bio = v_bio * (c_S_feed - c_S) / (v_S * spec.M_S);
  out.c_P = v_P * spec.M_P * out.c_bio / v_bio;
  return out;
}

double space_time_yield(double c_P, double v_bio) { return c_P * v_bio; }

std::array<double, 3> classical_residuals(const ChemostatState& s,
                                          const ClassicalChemostatParams& p) {
  const double bio = (p.mu - s.D) * s.c_bio;
  const double substrate = -p.mu * s.c_bio / p.Y_bio_S - p.q_P * s.c_bio / p.Y_P_S -
                           p.m_S * s.c_bio + s.D * (s.c_S_feed - s.c_S);
  const double product = p.q_P * s.c_bio - s.c_P * s.D;
  return {bio, substrate, product};
}

std::array<double, 2> flux_balance_residuals(double v_bio, double v_S, double v_P,
                                             const ChemostatState& s, const ProcessSpec& spec) {
  return {-v_S * spec.M_S * s.c_bio + v_bio * (s.c_S_feed - s.c_S),
          v_P * spec.M_P * s.c_bio - s.c_P * v_bio};
}

}  // namespace fermko::chemostat
