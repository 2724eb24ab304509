#include "nlbs/catalog.hpp"

#include <cmath>
#include <sstream>

#include "nlbs/csv.hpp"

namespace nlbs {
namespace catalog {

namespace {

// Radicands can drift a hair below zero from round-off when a node sits on a
// validity boundary; treat anything within 1e-12 of zero as the boundary.
JetValue sqrt_guarded(JetValue p) {
  if (p.v < 0.0 && p.v >= -1e-12) p.v = 0.0;
  return sqrt(p);
}

double lambda7(int eps, int delta, double k) {
  return (delta * std::sqrt(1.0 - 4.0 * eps * k * k) - 1.0) / (2.0 * k);
}

JetValue eval_t2(int row, const FamilyConstants& fc, double t, double x) {
  const JetValue T = jet_time(t);
  const JetValue X = jet_space(x);
  const double c1 = fc.c1, c2 = fc.c2, k = fc.k;
  const double eps = fc.eps, delta = fc.delta;
  switch (row) {
    case 1:
      return jet_const(c1);
    case 2:
      return c1 + c2 * exp(-X);
    case 3: {
      const JetValue xi = X + eps * T;
      return c1 - eps * xi + 4.0 * delta * c2 * exp(xi * -0.5) +
             eps * c2 * c2 * exp(-xi);
    }
    case 4:
      return c1 - T - eps * X;
    case 5:
      return c1 + 4.0 * delta * exp(X * -0.5) - (T + c2) * exp(-X);
    case 6:
      return c1 + c2 * exp(-X) + delta * X - T;
    case 7:
      return c1 + eps * T + lambda7(fc.eps, fc.delta, k) * (X + T / k);
    case 8: {
      const JetValue E = exp(-X);
      return c1 + c2 * E - (1.0 + E / k) * T +
             (delta / k) *
                 ((k - 0.5 * E) * X - 3.0 * sqrt_guarded(k * (k + E)) +
                  (2.0 * k - E) * log(std::sqrt(k) + sqrt_guarded(k + E)));
    }
    case 9: {
      const JetValue E = exp(-X);
      return c1 + c2 * E - (1.0 - E / k) * T +
             (delta / k) *
                 ((k + 0.5 * E) * X - 3.0 * sqrt_guarded(k * (k - E)) +
                  (2.0 * k + E) * log(std::sqrt(k) + sqrt_guarded(k - E)));
    }
    case 10: {
      const JetValue E = exp(-X);
      return c1 + c2 * E + (1.0 - E / k) * T +
             (delta / k) * (2.0 * (k + 0.5 * E) * atan(sqrt_guarded((E - k) / k)) -
                            3.0 * sqrt_guarded(k * (E - k)));
    }
  }
  throw Error("unknown T2 row");
}

JetValue eval_t3(int row, const ModelParams& mp, const FamilyConstants& fc,
                 double t, double x) {
  const JetValue T = jet_time(t);
  const JetValue X = jet_space(x);
  const double a = mp.a, b = mp.b;
  const double c1 = fc.c1, c2 = fc.c2, k = fc.k;
  const double eps = fc.eps, delta = fc.delta;
  const JetValue L = log(X);
  switch (row) {
    case 1:
      return c1 + (a / (2.0 * b)) * X * (c2 + 0.5 * a * T - L);
    case 2:
      return c1 - T + 4.0 * delta * sqrt(X / b) +
             (a / (2.0 * b)) * X * (c2 + 0.5 * a * T - L);
    case 3:
      return c1 + ((a + 2.0 * eps) / (2.0 * b)) * X *
                      (c2 + 0.5 * (a - 2.0 * eps) * T - L);
    case 4:
      return eps * c1 * c1 * exp(T * -eps) +
             4.0 * delta * c1 * exp(T * (-0.5 * eps)) * sqrt(X / b) +
             ((a + 2.0 * eps) / (2.0 * b)) * X *
                 (c2 + 0.5 * (a - 2.0 * eps) * T - L);
    case 5:
      return (X / b) * (c1 + (eps + 0.25 * a * a) * T - 0.5 * a * L +
                        lambda7(fc.eps, fc.delta, k) * (T / k + L));
    case 6: {
      const JetValue G = b / (k * X);
      return c1 - T / k +
             (X / b) * (c2 + (0.25 * a * a - 1.0) * T - 0.5 * a * L +
                        delta * ((1.0 - 0.5 * G) *
                                     log((2.0 / G) * (1.0 + sqrt(1.0 + G)) + 1.0) -
                                 3.0 * sqrt(1.0 + G)));
    }
    case 7: {
      const JetValue G = b / (k * X);
      return c1 + T / k +
             (X / b) *
                 (c2 + (0.25 * a * a - 1.0) * T - 0.5 * a * L +
                  delta * ((1.0 + 0.5 * G) *
                               log((2.0 / G) * (1.0 + sqrt_guarded(1.0 - G)) - 1.0) -
                           3.0 * sqrt_guarded(1.0 - G)));
    }
    case 8: {
      const JetValue G = b / (k * X);
      return c1 - T / k +
             (X / b) * (c2 + (0.25 * a * a + 1.0) * T - 0.5 * a * L +
                        delta * (2.0 * (1.0 + 0.5 * G) * atan(sqrt_guarded(G - 1.0)) -
                                 3.0 * sqrt_guarded(G - 1.0)));
    }
  }
  throw Error("unknown T3 row");
}

JetValue eval_t4(int row, const ModelParams& mp, const FamilyConstants& fc,
                 double t, double x) {
  const JetValue T = jet_time(t);
  const JetValue X = jet_space(x);
  const double a = mp.a, b = mp.b, c = mp.c;
  const double c1 = fc.c1, c2 = fc.c2, k = fc.k;
  const double eps = fc.eps, delta = fc.delta;
  const JetValue L = log(X);
  const JetValue EC = exp(T * c);
  const double h = 0.5 * a * (1.0 + a / (2.0 * c));
  switch (row) {
    case 1:
      return c1 * EC + (a / (2.0 * b)) * X * (c2 + 0.5 * (a + 2.0 * c) * T - L);
    case 2:
      return (c1 - c * T) * EC + 4.0 * delta * exp(T * (0.5 * c)) * sqrt(X * (c / b)) +
             (a / (2.0 * b)) * X * (c2 + 0.5 * (a + 2.0 * c) * T - L);
    case 3:
      return c1 * EC + ((a + 2.0 * eps * c) / (2.0 * b)) * X *
                           (c2 + 0.5 * (a + 2.0 * (1.0 - eps) * c) * T - L);
    case 4:
      return eps * c1 * c1 * exp(T * ((1.0 - eps) * c)) +
             4.0 * delta * c1 * exp(T * (0.5 * c * (1.0 - eps))) * sqrt(X * (c / b)) +
             ((a + 2.0 * eps * c) / (2.0 * b)) * X *
                 (c2 + 0.5 * (a + 2.0 * (1.0 - eps) * c) * T - L);
    case 5:
      return (X * (c / b)) *
             (c1 + (eps * c + h) * T - (a / (2.0 * c)) * L +
              lambda7(fc.eps, fc.delta, k) * ((1.0 / k - 1.0) * c * T + L));
    case 6: {
      const JetValue G = (b / (k * c)) * exp(T * c) / X;
      return (c1 - (c / k) * T) * EC +
             (X * (c / b)) *
                 (c2 + (h - c) * T - (a / (2.0 * c)) * L +
                  delta * ((1.0 - 0.5 * G) *
                               log((2.0 / G) * (1.0 + sqrt(1.0 + G)) + 1.0) -
                           3.0 * sqrt(1.0 + G)));
    }
    case 7: {
      const JetValue G = (b / (k * c)) * exp(T * c) / X;
      return (c1 + (c / k) * T) * EC +
             (X * (c / b)) *
                 (c2 + (h - c) * T - (a / (2.0 * c)) * L +
                  delta * ((1.0 + 0.5 * G) *
                               log((2.0 / G) * (1.0 + sqrt_guarded(1.0 - G)) - 1.0) -
                           3.0 * sqrt_guarded(1.0 - G)));
    }
    case 8: {
      const JetValue G = (b / (k * c)) * exp(T * c) / X;
      return (c1 - (c / k) * T) * EC +
             (X * (c / b)) *
                 (c2 + (h + c) * T - (a / (2.0 * c)) * L +
                  delta * (2.0 * (1.0 + 0.5 * G) * atan(sqrt_guarded(G - 1.0)) -
                           3.0 * sqrt_guarded(G - 1.0)));
    }
  }
  throw Error("unknown T4 row");
}

JetValue eval_any(const FamilyId& id, const ModelParams& params,
                  const FamilyConstants& consts, double t, double x) {
  switch (id.table) {
    case Table::T2:
      return eval_t2(id.row, consts, t, x);
    case Table::T3:
      return eval_t3(id.row, params, consts, t, x);
    case Table::T4:
      return eval_t4(id.row, params, consts, t, x);
    default:
      throw DomainViolation(to_string(id) +
                            " is a traveling-wave template without a closed-form profile");
  }
}

void check_sign(int s, const char* name) {
  if (s != 1 && s != -1)
    throw DomainViolation(std::string(name) + " must be +1 or -1");
}

int row_count(Table t) {
  switch (t) {
    case Table::T2: return 10;
    case Table::T3: return 8;
    case Table::T4: return 8;
    default: return 1;
  }
}

}  // namespace

std::string to_string(const FamilyId& id) {
  switch (id.table) {
    case Table::T2: return "T2." + std::to_string(id.row);
    case Table::T3: return "T3." + std::to_string(id.row);
    case Table::T4: return "T4." + std::to_string(id.row);
    case Table::EQ6: return "EQ6";
    case Table::EQ7: return "EQ7";
  }
  return "?";
}

FamilyId parse_family_id(const std::string& text) {
  if (text == "EQ6") return {Table::EQ6, 1};
  if (text == "EQ7") return {Table::EQ7, 1};
  Table table;
  if (text.rfind("T2.", 0) == 0) table = Table::T2;
  else if (text.rfind("T3.", 0) == 0) table = Table::T3;
  else if (text.rfind("T4.", 0) == 0) table = Table::T4;
  else throw DomainViolation("unknown family id: " + text);
  int row = 0;
  try {
    row = std::stoi(text.substr(3));
  } catch (const std::exception&) {
    throw DomainViolation("unknown family id: " + text);
  }
  FamilyId id{table, row};
  if (row < 1 || row > row_count(table))
    throw DomainViolation("row out of range for " + text);
  return id;
}

std::vector<FamilyInfo> list_families() {
  std::vector<FamilyInfo> out;
  const char* t2_consts[10] = {"c1",          "c1,c2",       "c1,c2,eps,delta",
                               "c1,eps",      "c1,c2,delta", "c1,c2,delta",
                               "c1,eps,delta,k", "c1,c2,delta,k", "c1,c2,delta,k",
                               "c1,c2,delta,k"};
  const char* t2_domain[10] = {"all (t,x)", "all (t,x)", "all (t,x)", "all (t,x)",
                               "all (t,x)", "all (t,x)", "all (t,x)", "all (t,x)",
                               "x >= -log k", "x <= -log k"};
  for (int r = 1; r <= 10; ++r)
    out.push_back({{Table::T2, r}, t2_consts[r - 1], t2_domain[r - 1], "canonical", true});

  const char* t34_consts[8] = {"c1,c2", "c1,c2,delta", "c1,c2,eps", "c1,c2,eps,delta",
                               "c1,eps,delta,k", "c1,c2,delta,k", "c1,c2,delta,k",
                               "c1,c2,delta,k"};
  const char* t3_domain[8] = {"t,x > 0", "t,x > 0", "t,x > 0", "t,x > 0",
                              "t,x > 0", "t,x > 0", "t,x > 0 and x >= b/k",
                              "t,x > 0 and x <= b/k"};
  for (int r = 1; r <= 8; ++r)
    out.push_back({{Table::T3, r}, t34_consts[r - 1], t3_domain[r - 1], "bse (c=0)", true});
  const char* t4_domain[8] = {"t,x > 0", "t,x > 0", "t,x > 0", "t,x > 0",
                              "t,x > 0", "t,x > 0",
                              "t,x > 0 and x >= (b/kc) e^{ct}",
                              "t,x > 0 and x <= (b/kc) e^{ct}"};
  for (int r = 1; r <= 8; ++r)
    out.push_back({{Table::T4, r}, t34_consts[r - 1], t4_domain[r - 1], "bse (c>0)", true});

  out.push_back({{Table::EQ6, 1}, "k,lambda (free); profile unsolved", "all (t,x)",
                 "canonical", false});
  out.push_back({{Table::EQ7, 1}, "c1,c2,k,lambda (free); profile unsolved", "all (t,x)",
                 "canonical", false});
  return out;
}

void validate_constants(const FamilyId& id, const ModelParams& params,
                        const FamilyConstants& consts) {
  check_sign(consts.eps, "eps");
  check_sign(consts.delta, "delta");

  if (id.table == Table::EQ6 || id.table == Table::EQ7) return;

  if (id.table == Table::T3 && params.c != 0.0)
    throw DomainViolation("Table 3 rows solve the c = 0 equation; got c > 0");
  if (id.table == Table::T4 && !(params.c > 0.0))
    throw DomainViolation("Table 4 rows solve the c > 0 equation; got c = 0");

  const bool seven_like = (id.table == Table::T2 && id.row == 7) ||
                          ((id.table == Table::T3 || id.table == Table::T4) && id.row == 5);
  if (seven_like) {
    if (consts.eps == -1) {
      if (consts.k == 0.0)
        throw DomainViolation("footnote c: k != 0 required when eps = -1");
    } else {
      const double ak = std::fabs(consts.k);
      if (!(ak > 0.0) || ak > 0.5)
        throw DomainViolation("footnote c: 0 < |k| <= 1/2 required when eps = +1");
    }
  }

  const bool k_unit = (id.table == Table::T2 && id.row >= 8) ||
                      ((id.table == Table::T3 || id.table == Table::T4) && id.row >= 6);
  if (k_unit && !(consts.k > 0.0 && consts.k < 1.0))
    throw DomainViolation("footnote: 0 < k < 1 required");

  if (id.table == Table::T2) {
    // Sign conventions of the generating reductions (Remark 1 / the algebra
    // column): rows 6, 8, 9 exist only for eps = -1, row 10 only for eps = +1.
    if ((id.row == 6 || id.row == 8 || id.row == 9) && consts.eps != -1)
      throw DomainViolation("Remark 1: row " + std::to_string(id.row) +
                            " has real solutions only for eps = -1");
    if (id.row == 10 && consts.eps != 1)
      throw DomainViolation("row 10 is generated with eps = +1");
  }
}

bool domain_ok(const FamilyId& id, const ModelParams& params,
               const FamilyConstants& consts, double t, double x) {
  switch (id.table) {
    case Table::T2:
      if (id.row == 9) return x >= -std::log(consts.k);
      if (id.row == 10) return x <= -std::log(consts.k);
      return true;
    case Table::T3:
      if (!(t > 0.0 && x > 0.0)) return false;
      if (id.row == 7) return x >= params.b / consts.k;
      if (id.row == 8) return x <= params.b / consts.k;
      return true;
    case Table::T4: {
      if (!(t > 0.0 && x > 0.0)) return false;
      const double edge = params.b / (consts.k * params.c) * std::exp(params.c * t);
      if (id.row == 7) return x >= edge;
      if (id.row == 8) return x <= edge;
      return true;
    }
    default:
      return true;
  }
}

Jet2 evaluate(const FamilyId& id, const ModelParams& params,
              const FamilyConstants& consts, double t, double x) {
  validate_constants(id, params, consts);
  if (!domain_ok(id, params, consts, t, x))
    throw DomainViolation(to_string(id) + " validity domain violated at (t,x)=(" +
                          std::to_string(t) + "," + std::to_string(x) + ")");
  return as_jet2(eval_any(id, params, consts, t, x));
}

JetEvaluator evaluator(const FamilyId& id, const ModelParams& params,
                       const FamilyConstants& consts) {
  validate_constants(id, params, consts);
  return [id, params, consts](double t, double x) {
    return evaluate(id, params, consts, t, x);
  };
}

ResidualStats residual_scan(const FamilyId& id, const ModelParams& params,
                            const FamilyConstants& consts, const GridSpec& grid) {
  validate_constants(id, params, consts);
  if (grid.nx < 1 || grid.nt < 1) throw DomainViolation("empty scan grid");
  const bool canonical = (id.table == Table::T2);
  if (id.table == Table::EQ6 || id.table == Table::EQ7)
    throw DomainViolation(to_string(id) + " has no closed form to scan");

  ResidualStats stats;
  for (int i = 0; i < grid.nt; ++i) {
    const double t = grid.nt == 1
                         ? grid.t0
                         : grid.t0 + (grid.t1 - grid.t0) * i / (grid.nt - 1);
    for (int j = 0; j < grid.nx; ++j) {
      const double x = grid.nx == 1
                           ? grid.x_lo
                           : grid.x_lo + (grid.x_hi - grid.x_lo) * j / (grid.nx - 1);
      if (!domain_ok(id, params, consts, t, x)) {
        ++stats.n_excluded;
        continue;
      }
      const Jet2 jet = as_jet2(eval_any(id, params, consts, t, x));
      const double raw = canonical ? canonical_residual(jet) : bse_residual(params, x, jet);
      if (!std::isfinite(raw)) {
        // A node sitting exactly on a validity boundary: one-sided
        // derivatives of the sqrt terms do not exist there.
        ++stats.n_excluded;
        continue;
      }
      const double rel = canonical ? canonical_residual_relative(jet)
                                   : bse_residual_relative(params, x, jet);
      stats.max_abs = std::max(stats.max_abs, std::fabs(raw));
      stats.max_rel = std::max(stats.max_rel, rel);
      ++stats.n_evaluated;
    }
  }
  if (stats.n_evaluated == 0)
    throw EmptyDomain("every node of the scan grid is outside the validity domain");
  return stats;
}

BobrovCheck bobrov_form_check(BobrovForm which, const ModelParams& params,
                              const BobrovRecord& rec, const GridSpec& grid) {
  if (params.c != 0.0)
    throw DomainViolation("Bobrov forms solve the c = 0 equation");
  check_sign(rec.delta, "delta");
  const double a = params.a, b = params.b;

  double K = 0.0, root = 0.0;
  if (which == BobrovForm::Second) {
    if (rec.c3 == 0.0) throw DomainViolation("second Bobrov form requires c3 != 0");
    K = (4.0 * rec.c4 * b - a * a) / (4.0 * rec.c3 * b);
    const double r2 = -rec.c3 * b * K;
    if (!(r2 > 0.0))
      throw DomainViolation("second Bobrov form requires -c3*b*K > 0");
    root = std::sqrt(r2);
  }

  auto eval = [&](double t, double x) -> JetValue {
    const JetValue T = jet_time(t);
    const JetValue X = jet_space(x);
    if (which == BobrovForm::First) {
      return rec.c1 + rec.c3 * X * (rec.c2 + (a - b * rec.c3) * T - log(X));
    }
    const JetValue R = 1.0 + 1.0 / (K * X);
    if (R.v < 0.0)
      throw DomainViolation("second Bobrov form radicand negative on the scan domain");
    return rec.c1 + rec.c3 * T +
           X * (rec.c2 + rec.c4 * T - (a / (2.0 * b)) * log(X) -
                (3.0 * rec.delta * root / b) * sqrt_guarded(R) -
                (rec.delta * rec.c3 * K / root) * (1.0 - 0.5 / (K * X)) *
                    log(2.0 * K * X * (1.0 + sqrt_guarded(R)) + 1.0));
  };

  BobrovCheck check;
  const bool t3r1_case =
      which == BobrovForm::First &&
      std::fabs(rec.c3 - a / (2.0 * b)) <= 1e-12 * (1.0 + std::fabs(rec.c3));

  for (int i = 0; i < grid.nt; ++i) {
    const double t = grid.nt == 1
                         ? grid.t0
                         : grid.t0 + (grid.t1 - grid.t0) * i / (grid.nt - 1);
    for (int j = 0; j < grid.nx; ++j) {
      const double x = grid.nx == 1
                           ? grid.x_lo
                           : grid.x_lo + (grid.x_hi - grid.x_lo) * j / (grid.nx - 1);
      if (!(t > 0.0 && x > 0.0)) {
        ++check.residual.n_excluded;
        continue;
      }
      const Jet2 jet = as_jet2(eval(t, x));
      const double raw = bse_residual(params, x, jet);
      check.residual.max_abs = std::max(check.residual.max_abs, std::fabs(raw));
      check.residual.max_rel =
          std::max(check.residual.max_rel, bse_residual_relative(params, x, jet));
      ++check.residual.n_evaluated;
      if (t3r1_case) {
        FamilyConstants fc;
        fc.c1 = rec.c1;
        fc.c2 = rec.c2;
        const Jet2 ref = evaluate({Table::T3, 1}, params, fc, t, x);
        check.max_diff_t3_row1 =
            std::max(check.max_diff_t3_row1, std::fabs(ref.u - jet.u));
      }
    }
  }
  if (check.residual.n_evaluated == 0)
    throw EmptyDomain("every node of the Bobrov scan grid is excluded");
  check.compared_t3_row1 = t3r1_case;
  return check;
}

std::string manifest_csv() {
  std::ostringstream out;
  CsvWriter csv(out);
  csv.header({"family_id", "constants_used", "domain_description", "owning_equation"});
  for (const FamilyInfo& info : list_families()) {
    std::string constants = info.constants_used;
    if (!info.closed_form) constants += " [unsolved-template]";
    csv.row({to_string(info.id), constants, info.domain, info.owning_equation});
  }
  return out.str();
}

}  // namespace catalog
}  // namespace nlbs
