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

#ifndef FERMKO_CHEMOSTAT_CHEMOSTAT_H_
#define FERMKO_CHEMOSTAT_CHEMOSTAT_H_

#include <array>
#include <stdexcept>

namespace fermko::chemostat {

inline constexpr double kGlucoseMolarMass = 0.18016;  // g/mmol
inline constexpr double kDefaultAtpmFloor = 6.86;     // mmol/gDW/h

struct ProcessSpec {
  double c_S_feed_max = 10.0;  // g/L
  double M_S = kGlucoseMolarMass;
  double M_P = 0.04607;  // g/mmol, ethanol
  bool aerobic = true;
  double f = 0.1;  // growth floor as a fraction of wild-type growth
  void check() const;
};

struct ChemostatState {
  double c_bio = 0.0;  // gDW/L
  double c_S = 0.0;    // g/L
  double c_P = 0.0;    // g/L
  double c_S_feed = 0.0;
  double D = 0.0;      // 1/h
};

struct ClassicalChemostatParams {
  double Y_bio_S = 1.0;  // g/g
  double Y_P_S = 1.0;    // g/g
  double m_S = 0.0;      // g/g/h
  double q_P = 0.0;      // g/g/h
  double mu = 0.0;       // 1/h
};

class ChemostatError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Concentrations {
  double c_bio = 0.0;
  double c_P = 0.0;
};

// Steady state of the flux-substituted balances
//   0 = -v_S M_S c_bio + v_bio (c_S_feed - c_S)
//   0 = v_P M_P c_bio - c_P v_bio.
// Throws ChemostatError when v_S or v_bio is not positive (washout or no
// uptake) or when c_S exceeds the feed.
Concentrations steady_state_concentrations(double v_bio, double v_S, double v_P, double c_S,
                                           double c_S_feed, const ProcessSpec& spec);

double space_time_yield(double c_P, double v_bio);

// Right-hand sides (dc_bio/dt, dc_S/dt, dc_P/dt) of the classical balances.
std::array<double, 3> classical_residuals(const ChemostatState& state,
                                          const ClassicalChemostatParams& p);

// Residuals of the two flux-substituted balances at a steady state.
std::array<double, 2> flux_balance_residuals(double v_bio, double v_S, double v_P,
                                             const ChemostatState& state,
                                             const ProcessSpec& spec);

}  // namespace fermko::chemostat

#endif  // FERMKO_CHEMOSTAT_CHEMOSTAT_H_
