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

#include "fermko/kinetics/kinetics.h"

#include <cmath>

namespace fermko::kinetics {

void MonodParams::check() const {
  if (!(K_S > 0.0) || !(v_bio_max > 0.0)) {
    throw std::invalid_argument("Monod parameters must be positive");
  }
}

void MichaelisMentenParams::check() const {
  if (!(K_S_MM > 0.0) || !(v_S_max > 0.0)) {
    throw std::invalid_argument("Michaelis-Menten parameters must be positive");
  }
}

KineticsKind kind_of(const KineticsSpec& spec) {
  return std::holds_alternative<MonodParams>(spec) ? KineticsKind::kMonod
                                                   : KineticsKind::kMichaelisMenten;
}

std::string to_string(KineticsKind kind) {
  return kind == KineticsKind::kMonod ? "monod" : "mm";
}

KineticsKind parse_kinetics(const std::string& text) {
  if (text == "monod") return KineticsKind::kMonod;
  if (text == "mm") return KineticsKind::kMichaelisMenten;
  throw std::invalid_argument("unknown kinetics '" + text + "' (expected monod or mm)");
}

double monod_substrate_conc(double v_bio, const MonodParams& p) {
  p.check();
  if (v_bio < 0.0) throw KineticsError("negative growth rate");
  if (v_bio > (1.0 - kMonodPoleGuard) * p.v_bio_max) {
    throw KineticsError("growth rate at the Monod pole");
  }
  return p.K_S * v_bio / (p.v_bio_max - v_bio);
}

double monod_growth(double c_S, const MonodParams& p) {
  return p.v_bio_max * c_S / (c_S + p.K_S);
}

double mm_uptake(double c_S, const MichaelisMentenParams& p) {
  return p.v_S_max * c_S / (c_S + p.K_S_MM);
}

double mm_substrate_conc(double v_S, const MichaelisMentenParams& p) {
  p.check();
  if (v_S < 0.0 || v_S >= p.v_S_max) throw KineticsError("uptake outside [0, v_S_max)");
  return p.K_S_MM * v_S / (p.v_S_max - v_S);
}

double SigmaReformulation::sigma_of(double c_S, const MichaelisMentenParams& p) {
  return c_S / (c_S + p.K_S_MM);
}

double SigmaReformulation::conc_of(double sigma, const MichaelisMentenParams& p) {
  if (sigma < 0.0 || sigma >= 1.0) throw KineticsError("sigma outside [0, 1)");
  return p.K_S_MM * sigma / (1.0 - sigma);
}

double SigmaReformulation::uptake_residual(double v_S, double sigma) const {
  return v_S - params.v_S_max * sigma;
}

double SigmaReformulation::fraction_residual(double c_S, double sigma) const {
  return sigma * (c_S + params.K_S_MM) - c_S;
}

bool SigmaReformulation::satisfied(double v_S, double c_S, double sigma, double tol) const {
  return std::abs(uptake_residual(v_S, sigma)) <= tol &&
         std::abs(fraction_residual(c_S, sigma)) <= tol;
}

SigmaReformulation sigma_constraints(const MichaelisMentenParams& p) {
  p.check();
  return SigmaReformulation{p};
}

}  // namespace fermko::kinetics
