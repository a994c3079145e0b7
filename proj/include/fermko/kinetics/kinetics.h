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

#ifndef FERMKO_KINETICS_KINETICS_H_
#define FERMKO_KINETICS_KINETICS_H_

#include <stdexcept>
#include <string>
#include <variant>

namespace fermko::kinetics {

inline constexpr double kMonodPoleGuard = 1e-6;
// The optimizer keeps v_bio at most this fraction of v_bio_max.
inline constexpr double kMonodGrowthCap = 1.0 - 1e-4;

struct MonodParams {
  double K_S = 0.044;        // g/L
  double v_bio_max = 0.73;   // 1/h
  void check() const;
};

struct MichaelisMentenParams {
  double K_S_MM = 0.53 * 0.18016;  // g/L (0.53 mmol/L of glucose)
  double v_S_max = 10.0;           // mmol/gDW/h
  void check() const;
};

using KineticsSpec = std::variant<MonodParams, MichaelisMentenParams>;

enum class KineticsKind { kMonod, kMichaelisMenten };
KineticsKind kind_of(const KineticsSpec& spec);
std::string to_string(KineticsKind kind);
// "monod" or "mm"; throws std::invalid_argument otherwise.
KineticsKind parse_kinetics(const std::string& text);

class KineticsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Substrate concentration sustaining growth v_bio under Monod kinetics.
// Throws KineticsError near the pole v_bio -> v_bio_max or for v_bio < 0.
double monod_substrate_conc(double v_bio, const MonodParams& p);
double monod_growth(double c_S, const MonodParams& p);

double mm_uptake(double c_S, const MichaelisMentenParams& p);
// Inverse of mm_uptake for 0 <= v_S < v_S_max.
double mm_substrate_conc(double v_S, const MichaelisMentenParams& p);

// v_S = v_S_max * sigma and sigma * (c_S + K_S_MM) = c_S.
struct SigmaReformulation {
  MichaelisMentenParams params;

  static double sigma_of(double c_S, const MichaelisMentenParams& p);
  // c_S from sigma in [0, 1).
  static double conc_of(double sigma, const MichaelisMentenParams& p);
  double uptake_residual(double v_S, double sigma) const;
  double fraction_residual(double c_S, double sigma) const;
  bool satisfied(double v_S, double c_S, double sigma, double tol) const;
};

SigmaReformulation sigma_constraints(const MichaelisMentenParams& p);

}  // namespace fermko::kinetics

#endif  // FERMKO_KINETICS_KINETICS_H_
