// Copyright 2026 The vortexsym Authors
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

// Drivers for the four symmetry classes. Each analyze_* function returns
// the raw findings; run_* wraps them into a ScenarioReport with checks
// against the published values.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vortexsym/groebner.hpp"
#include "vortexsym/interval.hpp"
#include "vortexsym/realroots.hpp"
#include "vortexsym/trigvortex.hpp"

namespace vortexsym {

// Some mu_i = 0; every classification assumes nonzero circulations.
class DegenerateCirculation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enclosure could not be tightened enough to decide a sign.
class InconclusiveEnclosure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Circulations = std::array<Rational, 4>;

// {mu1, mu2, mu3, mu4}.
const Registry& mu_registry();

struct ScenarioOptions {
  Rational eps = Rational(1, 1000000000);  // refinement width for reported roots
  std::optional<Circulations> mu;          // stability / configuration probe
  bool check_appendix = false;             // trapezoid: also the published-basis, Hermite and line checks
  std::uint64_t seed = 20240607;
};

// ---- reports ---------------------------------------------------------------

enum class CheckStatus { pass, fail, erratum };
std::string_view to_string(CheckStatus s);

struct OracleCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct Condition {
  std::string text;  // human-readable, e.g. "mu2 = mu4"
  Poly poly;         // machine form, vanishing on the condition
};

struct RootReport {
  std::string poly;
  std::string variable;
  Interval enclosure;
  std::optional<BigFloat> theta2;
};

// Endpoints are enclosures of algebraic numbers; nullopt means unbounded.
struct StabilityWindow {
  std::string variable;  // e.g. "mu1/mu3 (mu3 > 0)"
  std::optional<Interval> lower;
  std::optional<Interval> upper;
  bool lower_closed = false;
  bool upper_closed = false;
};

struct StabilityReport {
  std::vector<std::string> eigencounts;
  std::string verdict;
  std::vector<StabilityWindow> windows;
};

struct ScenarioReport {
  ScenarioKind kind;
  std::vector<Poly> pipeline;
  std::vector<Poly> elimination_basis;
  std::vector<Condition> conditions;
  std::vector<RootReport> roots;
  StabilityReport stability;
  std::vector<OracleCheck> checks;

  bool all_passed() const;
  const OracleCheck* find(std::string_view name) const;
};

// ---- shared helpers ----------------------------------------------------------

// True when p = k q for a nonzero rational k.
bool equal_up_to_scalar(const Poly& p, const Poly& q);
// Each generator of a reduces to zero modulo a Groebner basis of b, and
// vice versa, under grevlex.
bool same_ideal(std::span<const Poly> a, std::span<const Poly> b);

// Positive roots / eigenvalues of a numeric matrix's characteristic
// polynomial, after removing exactly `known_zero` factors of lambda.
struct EigenCount {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t nonreal = 0;
};
EigenCount count_eigenvalues(const QMatrix& m);
EigenCount count_eigenvalues(const Matrix<BigFloat>& m, std::size_t known_zero);

// ---- square ----------------------------------------------------------------

struct SquareSample {
  Rational mu1, mu2;
  bool hessian_formulas_exact;   // charpoly == prod (x - lambda_i)
  bool weighted_formulas_exact;
};

struct SquareFindings {
  std::array<TrigRational, 4> components;
  GroebnerBasis conditions;
  std::vector<SquareSample> samples;
  Poly literal_certificate;  // e1 + e2 + e3 with e3 = mu1 + mu2
  Poly scaled_certificate;   // 2 e1 + 2 e2 + e3
  UPoly degeneracy;          // product of the nonzero Hessian eigenvalues at mu1 = 1, in mu2
  std::vector<Rational> degenerate_ratios;  // mu2/mu1
  UPoly weighted_charpoly_ones;  // at mu = (1, 1, 1, 1)
  EigenCount hessian_at_3_2;     // mu1 = 3, mu2 = 2
};

SquareFindings analyze_square(const ScenarioOptions& options = {});
ScenarioReport run_square(const ScenarioOptions& options = {});

// ---- kite ------------------------------------------------------------------

struct KiteSample {
  Circulations mu;
  std::size_t real_roots;
};

struct KiteFindings {
  std::vector<PipelineResult> pipeline;
  GroebnerBasis elimination;
  Poly config_factor;            // the even sextic when mu4 = mu2
  bool unit_roots_exact;         // r = 1 and 3r^2 = 1 are roots at mu = 1
  Circulations probe;
  std::vector<IsolatingInterval> probe_roots;  // of the sextic at probe
  std::vector<KiteSample> parity_samples;
  // theta2 = 2pi/3
  std::array<Poly, 4> gradient_at_third;  // sqrt(3) * dV/dtheta_i, in Q[mu]
  GroebnerBasis forced;
  bool hessian_formulas_exact;
  bool weighted_formulas_exact;
  UPoly boundary;                 // in t = mu1/mu3
  std::vector<StabilityWindow> windows_positive;  // mu3 > 0
  std::vector<StabilityWindow> windows_negative;  // mu3 < 0
};

KiteFindings analyze_kite(const ScenarioOptions& options = {});
ScenarioReport run_kite(const ScenarioOptions& options = {});

// ---- rectangle -------------------------------------------------------------

struct BranchResidual {
  std::string name;
  int component;
  BigFloat ratio;          // residual / (mu1 mu2 f(theta)), constant along the branch
  BigFloat max_deviation;  // relative spread of the ratio over the samples
};

struct RectangleFindings {
  std::vector<PipelineResult> pipeline;
  GroebnerBasis elimination;
  std::vector<BranchResidual> residuals;
  std::vector<BigFloat> equal_branch_thetas;
  std::vector<BigFloat> opposite_branch_thetas;
  std::vector<std::pair<Circulations, EigenCount>> unstable_samples;  // weighted Hessian
  std::vector<std::pair<Circulations, EigenCount>> hessian_samples;
};

RectangleFindings analyze_rectangle(const ScenarioOptions& options = {});
ScenarioReport run_rectangle(const ScenarioOptions& options = {});

// ---- trapezoid -------------------------------------------------------------

struct PlaneRoot {
  IsolatingInterval b;
  Interval a;
};

struct AnnihilatingLine {
  std::array<Interval, 3> direction;  // unit (mu2, mu3, mu4)
  std::string kind;                   // "mu4=0", "mu2=mu4", "intersection", "l1"
  int discriminant_sign;              // of mu3^2 - 4 mu2 mu4 + 4 mu4^2
  std::vector<BigFloat> mu1;          // real roots of f1 on the line
};

struct PlanePairing {
  int letter;  // 1..3 for A, B, C
  int digit;   // 1..3
  bool f_vanish;
  std::optional<std::size_t> r_index;  // into valid_roots
};

struct TrapezoidFindings {
  std::vector<PipelineResult> pipeline;
  GroebnerBasis elimination;
  bool contains_published;  // f1..f9 in the computed ideal
  bool contained_in_published;
  bool f6_factorization;
  std::vector<Poly> remainder_coefficients;  // in (a, b)
  GroebnerBasis ab_basis;                    // lex a > b
  UPoly b_quintic;
  DescartesResult b_descartes;
  std::vector<PlaneRoot> planes;
  // Quadratic cofactor q: coefficients of mu2^2, mu2 mu3, mu3^2, mu2 mu4, mu3 mu4, mu4^2.
  std::array<BigFloat, 6> q;
  Inertia q_inertia;
  std::array<BigFloat, 3> q_eigenvalues;  // descending
  std::array<BigFloat, 3> q_null;         // unit, first coordinate negative
  BigFloat factorization_residual;
  std::vector<Poly> linear_coefficients;  // c1..c14
  GroebnerBasis annihilator;
  HermiteResult hermite;
  std::vector<AnnihilatingLine> lines;
  GroebnerBasis valid_theta;  // over (mu2, mu4, r, mu1, mu3)
  UPoly g;
  std::vector<IsolatingInterval> valid_roots;
  std::vector<BigFloat> valid_thetas;
  std::vector<PlanePairing> pairings;
  std::vector<BigFloat> equal_pairs_thetas;  // mu4 = mu2, mu3 = mu1
};

TrapezoidFindings analyze_trapezoid(const ScenarioOptions& options = {});
ScenarioReport run_trapezoid(const ScenarioOptions& options = {});

// Whether f1 vanishes identically on {mu1 = alpha mu2 + beta mu3,
// mu4 = beta mu2 + alpha mu3}. f1 restricts to (mu2^2 - mu3^2)(alpha^2 +
// beta - beta^2), so the question is the sign of that last factor.
bool check_f1_on_plane(const Rational& alpha, const Rational& beta);
// Same for alpha = -b, beta = -a at a root of the plane ideal: decided by
// ideal membership, else by refining until the sign is certain.
bool check_f1_on_plane(const GroebnerBasis& ab_basis, const PlaneRoot& root, const UPoly& b_quintic);
// f1 at a numeric point; throws InconclusiveEnclosure if the enclosure
// straddles zero.
bool f1_vanishes_at(const std::array<Interval, 4>& mu);

}  // namespace vortexsym
