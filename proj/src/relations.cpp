// Copyright 2026 The edrlab developers
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

#include "edr/relations.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace edr {

namespace {

constexpr double kPreconditionTol = 1e-10;  // means and squared-to-identity
constexpr double kCorollaryTrigger = 1e-9;
constexpr double kCircleBoundTol = 1e-9;    // |D - 1| for the circle form
constexpr double kRadicandFloor = -1e-10;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

double sqrt_radicand(double value, const std::string& what) {
  if (value < kRadicandFloor) {
    throw ValidationError(what + ": radicand " + std::to_string(value) +
                          " below tolerance, inconsistent inputs");
  }
  return std::sqrt(std::max(value, 0.0));
}

// eps * sqrt(1 - eps^2/4); nonnegative in exact arithmetic for binary models.
double hatted(double eps, const std::string& what) {
  return eps * sqrt_radicand(1.0 - 0.25 * eps * eps, what);
}

struct Context {
  const Observable* a = nullptr;
  const Observable* b = nullptr;
  const DensityOperator* rho = nullptr;
  const JointModel* joint = nullptr;
  MomentSet m;
  BoundPair bp;
  // Present only when built from a measuring process.
  std::optional<double> second_moment_term;  // |<[n(A),B]> + <[A,d(B)]>|
  // Deviations used by the binary-family preconditions.
  double a_sq_dev = 0.0;
  double b_sq_dev = 0.0;
  double cal_a_sq_dev = 0.0;
  double cal_b_sq_dev = 0.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
};

double squared_identity_deviation(const ComplexMatrix& m) {
  return (m * m - identity(m.rows())).cwiseAbs().maxCoeff();
}

Context make_context(const JointModel& j, const Observable& a,
                     const Observable& b, const DensityOperator& rho) {
  Context c;
  c.a = &a;
  c.b = &b;
  c.rho = &rho;
  c.joint = &j;
  c.m = moments(j, a, b, rho);
  c.bp = bound_pair(a, b, rho);
  c.a_sq_dev = squared_identity_deviation(a.matrix());
  c.b_sq_dev = squared_identity_deviation(b.matrix());
  c.cal_a_sq_dev = squared_identity_deviation(j.cal_a().matrix());
  c.cal_b_sq_dev = squared_identity_deviation(j.cal_b().matrix());
  c.mean_a = expectation(a, rho);
  c.mean_b = expectation(b, rho);
  return c;
}

std::optional<std::string> binary_precondition_failure(const Context& c) {
  if (c.a_sq_dev > kPreconditionTol) return std::string("A^2 != I");
  if (c.b_sq_dev > kPreconditionTol) return std::string("B^2 != I");
  if (c.cal_a_sq_dev > kPreconditionTol)
    return std::string("composite A-channel observable does not square to I");
  if (c.cal_b_sq_dev > kPreconditionTol)
    return std::string("composite B-channel observable does not square to I");
  if (std::abs(c.mean_a) > kPreconditionTol)
    return std::string("precondition <A>=0 failed (<A> = " +
                       std::to_string(c.mean_a) + ")");
  if (std::abs(c.mean_b) > kPreconditionTol)
    return std::string("precondition <B>=0 failed (<B> = " +
                       std::to_string(c.mean_b) + ")");
  return std::nullopt;
}

RelationReport skipped(RelationId id, const Context& c, std::string reason) {
  RelationReport r;
  r.id = id;
  r.lhs = kNaN;
  r.rhs = kNaN;
  r.residual = kNaN;
  r.satisfied = false;
  r.preconditions_met = false;
  r.diagnostic = std::move(reason);
  r.moments = c.m;
  r.bounds = c.bp;
  return r;
}

RelationReport scored(RelationId id, const Context& c, double lhs, double rhs,
                      double tolerance) {
  RelationReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = lhs - rhs;
  r.satisfied = r.residual >= -tolerance;
  r.preconditions_met = true;
  r.moments = c.m;
  r.bounds = c.bp;
  return r;
}

// Quadratic tradeoff form: eps^2 sB^2 + sA^2 eta^2
//                          + 2 eps eta sqrt(sA^2 sB^2 - bound^2) >= bound^2.
RelationReport quadratic_form(RelationId id, const Context& c, double bound,
                              double tolerance) {
  const double e = c.m.eps_a;
  const double h = c.m.eps_b;
  const double sa = c.m.sigma_a;
  const double sb = c.m.sigma_b;
  const double cross =
      sqrt_radicand(sa * sa * sb * sb - bound * bound, "tradeoff cross term");
  const double lhs =
      e * e * sb * sb + sa * sa * h * h + 2.0 * e * h * cross;
  return scored(id, c, lhs, bound * bound, tolerance);
}

// Hatted binary form: ehat^2 + hhat^2 + 2 ehat hhat sqrt(1-bound^2) >= bound^2.
RelationReport binary_form(RelationId id, const Context& c, double bound,
                           double tolerance) {
  if (auto failure = binary_precondition_failure(c)) {
    return skipped(id, c, *failure);
  }
  const double ehat = hatted(c.m.eps_a, "hatted error");
  const double hhat = hatted(c.m.eps_b, "hatted disturbance");
  const double cross = sqrt_radicand(1.0 - bound * bound, "binary cross term");
  const double lhs = ehat * ehat + hhat * hhat + 2.0 * ehat * hhat * cross;
  return scored(id, c, lhs, bound * bound, tolerance);
}

RelationReport evaluate_in(RelationId id, const Context& c, double tolerance) {
  const double e = c.m.eps_a;
  const double h = c.m.eps_b;
  const double sa = c.m.sigma_a;
  const double sb = c.m.sigma_b;
  const double abs_c = std::abs(c.bp.c_ab);
  const double d = c.bp.d_ab;

  switch (id) {
    case RelationId::OZAWA_EDR:
      return scored(id, c, e * h + e * sb + sa * h, abs_c, tolerance);

    case RelationId::OZAWA_SECOND:
      // Uses the probe-contraction realization of the first-moment
      // operators n(A), d(B); only measuring processes carry them.
      if (!c.second_moment_term) {
        return skipped(id, c, "requires a measuring process");
      }
      return scored(id, c, e * h + *c.second_moment_term, abs_c, tolerance);

    case RelationId::ERROR_FREE_COROLLARY:
      if (e > kCorollaryTrigger) {
        return skipped(id, c, "not error-free: eps(A) = " + std::to_string(e));
      }
      return scored(id, c, sa * h, abs_c, tolerance);

    case RelationId::NONDISTURBING_COROLLARY:
      if (h > kCorollaryTrigger) {
        return skipped(id, c,
                       "not non-disturbing: eta(B) = " + std::to_string(h));
      }
      return scored(id, c, e * sb, abs_c, tolerance);

    case RelationId::HEISENBERG_EDR:
      return scored(id, c, e * h, abs_c, tolerance);

    case RelationId::BRANCIARD:
      return quadratic_form(id, c, abs_c, tolerance);

    case RelationId::BRANCIARD_BINARY:
      return binary_form(id, c, abs_c, tolerance);

    case RelationId::INFO_THEORETIC_ZX: {
      if (c.a->dim() != 2 ||
          (c.a->matrix() - pauli_z().matrix()).cwiseAbs().maxCoeff() >
              kPreconditionTol ||
          (c.b->matrix() - pauli_x().matrix()).cwiseAbs().maxCoeff() >
              kPreconditionTol ||
          (c.rho->matrix() - 0.5 * identity(2)).cwiseAbs().maxCoeff() >
              kPreconditionTol) {
        return skipped(id, c, "fixed comparator: requires A=Z, B=X, rho=I/2");
      }
      const double bound = 16.0 / (std::numbers::pi * std::numbers::pi *
                                   std::numbers::e * std::numbers::e);
      const double lhs = (e * e + 1.0 / 3.0) * (h * h + 1.0 / 3.0);
      return scored(id, c, lhs, bound, tolerance);
    }

    case RelationId::MIXED_EDR:
      return quadratic_form(id, c, d, tolerance);

    case RelationId::MIXED_BINARY:
      return binary_form(id, c, d, tolerance);

    case RelationId::SPIN_CIRCLE: {
      if (auto failure = binary_precondition_failure(c)) {
        return skipped(id, c, *failure);
      }
      // The circle form is the D = 1 slice of the binary mixed relation.
      if (std::abs(d - 1.0) > kCircleBoundTol) {
        return skipped(id, c, "circle form requires D_AB = 1, got " +
                                  std::to_string(d));
      }
      const double circle = (e * e - 2.0) * (e * e - 2.0) +
                            (h * h - 2.0) * (h * h - 2.0);
      return scored(id, c, 4.0, circle, tolerance);
    }

    case RelationId::GETRM: {
      if (!c.m.sigma_cal_a_positive || !c.m.sigma_cal_b_positive) {
        return skipped(id, c, "sigma(calA) or sigma(calB) below 1e-10");
      }
      const double sca = c.m.sigma_cal_a;
      const double scb = c.m.sigma_cal_b;
      const double proj_a =
          (sa * sa + sca * sca - (e * e - c.m.delta_a * c.m.delta_a)) /
          (2.0 * sca);
      const double proj_b =
          (sb * sb + scb * scb - (h * h - c.m.delta_b * c.m.delta_b)) /
          (2.0 * scb);
      const double ea =
          sqrt_radicand(sa * sa - proj_a * proj_a, "fluctuation term A");
      const double eb =
          sqrt_radicand(sb * sb - proj_b * proj_b, "fluctuation term B");
      const double cross =
          sqrt_radicand(sa * sa * sb * sb - d * d, "tradeoff cross term");
      const double lhs =
          ea * ea * sb * sb + sa * sa * eb * eb + 2.0 * ea * eb * cross;
      return scored(id, c, lhs, d * d, tolerance);
    }

    case RelationId::ROBERTSON:
      return scored(id, c, sa * sb, abs_c, tolerance);

    case RelationId::ROBERTSON_D:
      return scored(id, c, sa * sb, d, tolerance);

    case RelationId::ETRM:
      return quadratic_form(id, c, d, tolerance);

    case RelationId::ETRMB:
      return binary_form(id, c, d, tolerance);
  }
  throw ValidationError("evaluate: unknown relation id");
}

Context make_context(const MeasuringProcess& p, const JointModel& j,
                     const Observable& a, const Observable& b,
                     const DensityOperator& rho) {
  Context c = make_context(j, a, b, rho);
  const FirstMoments fm = first_moment_operators(p, a, b);
  const Complex term =
      (commutator(fm.error.matrix(), b.matrix()) * rho.matrix()).trace() +
      (commutator(a.matrix(), fm.disturbance.matrix()) * rho.matrix()).trace();
  c.second_moment_term = std::abs(term);
  return c;
}

}  // namespace

const std::vector<RelationId>& all_relation_ids() {
  static const std::vector<RelationId> ids = {
      RelationId::OZAWA_EDR,
      RelationId::OZAWA_SECOND,
      RelationId::ERROR_FREE_COROLLARY,
      RelationId::NONDISTURBING_COROLLARY,
      RelationId::HEISENBERG_EDR,
      RelationId::BRANCIARD,
      RelationId::BRANCIARD_BINARY,
      RelationId::INFO_THEORETIC_ZX,
      RelationId::MIXED_EDR,
      RelationId::MIXED_BINARY,
      RelationId::SPIN_CIRCLE,
      RelationId::GETRM,
      RelationId::ROBERTSON,
      RelationId::ROBERTSON_D,
      RelationId::ETRM,
      RelationId::ETRMB,
  };
  return ids;
}

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::OZAWA_EDR: return "OZAWA_EDR";
    case RelationId::OZAWA_SECOND: return "OZAWA_SECOND";
    case RelationId::ERROR_FREE_COROLLARY: return "ERROR_FREE_COROLLARY";
    case RelationId::NONDISTURBING_COROLLARY: return "NONDISTURBING_COROLLARY";
    case RelationId::HEISENBERG_EDR: return "HEISENBERG_EDR";
    case RelationId::BRANCIARD: return "BRANCIARD";
    case RelationId::BRANCIARD_BINARY: return "BRANCIARD_BINARY";
    case RelationId::INFO_THEORETIC_ZX: return "INFO_THEORETIC_ZX";
    case RelationId::MIXED_EDR: return "MIXED_EDR";
    case RelationId::MIXED_BINARY: return "MIXED_BINARY";
    case RelationId::SPIN_CIRCLE: return "SPIN_CIRCLE";
    case RelationId::GETRM: return "GETRM";
    case RelationId::ROBERTSON: return "ROBERTSON";
    case RelationId::ROBERTSON_D: return "ROBERTSON_D";
    case RelationId::ETRM: return "ETRM";
    case RelationId::ETRMB: return "ETRMB";
  }
  return "UNKNOWN";
}

std::optional<RelationId> parse_relation_id(const std::string& name) {
  for (RelationId id : all_relation_ids()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool counts_toward_status(RelationId id) {
  return id != RelationId::HEISENBERG_EDR &&
         id != RelationId::INFO_THEORETIC_ZX;
}

RelationReport evaluate(RelationId id, const MeasuringProcess& p,
                        const Observable& a, const Observable& b,
                        const DensityOperator& rho, double tolerance) {
  const JointModel j = to_joint_model(p, b);
  const Context c = make_context(p, j, a, b, rho);
  return evaluate_in(id, c, tolerance);
}

RelationReport evaluate(RelationId id, const JointModel& j,
                        const Observable& a, const Observable& b,
                        const DensityOperator& rho, double tolerance) {
  const Context c = make_context(j, a, b, rho);
  return evaluate_in(id, c, tolerance);
}

std::vector<RelationReport> evaluate_all(const MeasuringProcess& p,
                                         const Observable& a,
                                         const Observable& b,
                                         const DensityOperator& rho,
                                         const std::vector<RelationId>& ids,
                                         double tolerance) {
  const JointModel j = to_joint_model(p, b);
  const Context c = make_context(p, j, a, b, rho);
  std::vector<RelationReport> reports;
  reports.reserve(ids.size());
  for (RelationId id : ids) {
    reports.push_back(evaluate_in(id, c, tolerance));
  }
  return reports;
}

std::vector<RelationReport> evaluate_all(const JointModel& j,
                                         const Observable& a,
                                         const Observable& b,
                                         const DensityOperator& rho,
                                         const std::vector<RelationId>& ids,
                                         double tolerance) {
  const Context c = make_context(j, a, b, rho);
  std::vector<RelationReport> reports;
  reports.reserve(ids.size());
  for (RelationId id : ids) {
    reports.push_back(evaluate_in(id, c, tolerance));
  }
  return reports;
}

CorollaryReport corollary_check(const MeasuringProcess& p, const Observable& a,
                                const Observable& b, const DensityOperator& rho,
                                double tolerance) {
  const JointModel j = to_joint_model(p, b);
  const Context c = make_context(p, j, a, b, rho);
  CorollaryReport report;
  if (c.m.eps_a <= kCorollaryTrigger) {
    report.error_free =
        evaluate_in(RelationId::ERROR_FREE_COROLLARY, c, tolerance);
  }
  if (c.m.eps_b <= kCorollaryTrigger) {
    report.nondisturbing =
        evaluate_in(RelationId::NONDISTURBING_COROLLARY, c, tolerance);
  }
  return report;
}

}  // namespace edr
