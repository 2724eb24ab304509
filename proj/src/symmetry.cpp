#include "nlbs/symmetry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "nlbs/csv.hpp"

namespace nlbs {
namespace symmetry {

namespace {

using CoeffFn = std::function<Grad3(const Grad3&, const Grad3&, const Grad3&)>;

Grad3 zero_fn(const Grad3&, const Grad3&, const Grad3&) { return g3_const(0.0); }

/// (e^{lambda s} - 1) / lambda, continuous at lambda = 0.
double expm1_over(double lambda, double s) {
  if (lambda == 0.0) return s;
  return std::expm1(lambda * s) / lambda;
}

}  // namespace

const std::array<VectorField, 5>& mai_basis() {
  static const std::array<VectorField, 5> basis = {
      VectorField{"X1", zero_fn,
                  [](const Grad3&, const Grad3&, const Grad3&) { return g3_const(-1.0); },
                  zero_fn},
      VectorField{"X2", zero_fn, zero_fn,
                  [](const Grad3&, const Grad3& x, const Grad3&) { return -exp(-x); }},
      VectorField{"X3",
                  [](const Grad3&, const Grad3&, const Grad3&) { return g3_const(1.0); },
                  zero_fn, zero_fn},
      VectorField{"X4", zero_fn, zero_fn,
                  [](const Grad3&, const Grad3&, const Grad3&) { return g3_const(1.0); }},
      VectorField{"X5",
                  [](const Grad3& t, const Grad3&, const Grad3&) { return t; },
                  zero_fn,
                  [](const Grad3&, const Grad3&, const Grad3& u) { return -u; }},
  };
  return basis;
}

FieldValue eval_field(const VectorField& f, double t, double x, double u) {
  const Grad3 T = g3_time(t), X = g3_space(x), U = g3_value(u);
  return {f.xi_t(T, X, U).v, f.xi_x(T, X, U).v, f.eta(T, X, U).v};
}

FieldValue lie_bracket(const VectorField& A, const VectorField& B,
                       double t, double x, double u) {
  const Grad3 T = g3_time(t), X = g3_space(x), U = g3_value(u);
  const FieldValue a = eval_field(A, t, x, u);
  const FieldValue b = eval_field(B, t, x, u);
  auto directional = [&](const FieldValue& v, const Grad3& g) {
    return v.xi_t * g.d_t + v.xi_x * g.d_x + v.eta * g.d_u;
  };
  FieldValue out;
  out.xi_t = directional(a, B.xi_t(T, X, U)) - directional(b, A.xi_t(T, X, U));
  out.xi_x = directional(a, B.xi_x(T, X, U)) - directional(b, A.xi_x(T, X, U));
  out.eta = directional(a, B.eta(T, X, U)) - directional(b, A.eta(T, X, U));
  return out;
}

CommutatorTable commutator_table() {
  // Generic sample points; brackets are resolved in the basis by least
  // squares over all of them so the table is an output, not an input.
  static const double pts[10][3] = {
      {0.7, 0.3, 1.2},  {1.3, -0.4, 0.8}, {0.2, 1.7, -0.5}, {2.1, 0.9, 0.4},
      {0.5, -1.2, 2.2}, {1.8, 0.6, -1.1}, {0.9, 1.1, 0.7},  {1.6, -0.8, 1.5},
      {0.4, 0.2, -0.9}, {2.4, 1.4, 0.6}};

  const auto& basis = mai_basis();
  CommutatorTable table;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      Eigen::MatrixXd M(30, 5);
      Eigen::VectorXd rhs(30);
      for (int p = 0; p < 10; ++p) {
        const double t = pts[p][0], x = pts[p][1], u = pts[p][2];
        const FieldValue br = lie_bracket(basis[i], basis[j], t, x, u);
        rhs(3 * p + 0) = br.xi_t;
        rhs(3 * p + 1) = br.xi_x;
        rhs(3 * p + 2) = br.eta;
        for (int m = 0; m < 5; ++m) {
          const FieldValue bm = eval_field(basis[m], t, x, u);
          M(3 * p + 0, m) = bm.xi_t;
          M(3 * p + 1, m) = bm.xi_x;
          M(3 * p + 2, m) = bm.eta;
        }
      }
      Eigen::VectorXd sol = M.colPivHouseholderQr().solve(rhs);
      const double defect = (M * sol - rhs).norm();
      if (defect > 1e-8 * (1.0 + rhs.norm()))
        throw NotInSpan("bracket [" + basis[i].name + "," + basis[j].name +
                        "] is not in the basis span");
      for (int m = 0; m < 5; ++m) table.coeff[i][j][m] = sol(m);
    }
  }
  return table;
}

std::string commutator_table_csv(const CommutatorTable& table) {
  std::ostringstream out;
  CsvWriter csv(out);
  const auto& basis = mai_basis();
  std::vector<std::string> head{"bracket"};
  for (const auto& b : basis) head.push_back(b.name);
  csv.header(head);
  for (int i = 0; i < 5; ++i) {
    std::vector<std::string> row{basis[i].name};
    for (int j = 0; j < 5; ++j) {
      std::string cell;
      for (int m = 0; m < 5; ++m) {
        if (m) cell += ' ';
        double v = table.coeff[i][j][m];
        if (std::fabs(v) < 1e-12) v = 0.0;  // keep the export readable
        cell += csv_number(v);
      }
      row.push_back(cell);
    }
    csv.row(row);
  }
  return out.str();
}

FlowMap FlowMap::basis(int index, double s) {
  if (index < 1 || index > 5) throw DomainViolation("generator index must be 1..5");
  FlowMap fm;
  fm.alpha[index - 1] = 1.0;
  fm.s = s;
  return fm;
}

FlowMap FlowMap::combination(const std::array<double, 5>& alpha, double s) {
  return {alpha, s};
}

// The general element a1 X1 + ... + a5 X5 has
//   dx/ds = -a1,  dt/ds = a3 + a5 t,  du/ds = -a2 e^{-x} + a4 - a5 u,
// all solvable in closed form along the flow.
SpacePoint flow_point(const FlowMap& fm, const SpacePoint& p) {
  const auto& a = fm.alpha;
  const double s = fm.s;
  SpacePoint q;
  q.x = p.x - a[0] * s;
  q.t = std::exp(a[4] * s) * p.t + a[2] * expm1_over(a[4], s);
  const double decay = std::exp(-a[4] * s);
  q.u = decay * (p.u - a[1] * std::exp(-p.x) * expm1_over(a[0] + a[4], s) +
                 a[3] * expm1_over(a[4], s));
  return q;
}

JetEvaluator apply_flow(const FlowMap& fm, JetEvaluator f) {
  const auto a = fm.alpha;
  const double s = fm.s;
  const double e15 = expm1_over(a[0] + a[4], s);
  const double e5 = expm1_over(a[4], s);
  const double decay = std::exp(-a[4] * s);
  return [a, s, e15, e5, decay, f = std::move(f)](double T, double X) -> Jet2 {
    // Pre-image of (T, X) under the coordinate part of the flow.
    const double x = X + a[0] * s;
    const double t = (T - a[2] * e5) * decay;
    const Jet2 J = f(t, x);
    const double shift = a[1] * std::exp(-x);
    Jet2 out;
    out.u = decay * (J.u - shift * e15 + a[3] * e5);
    out.u_t = decay * decay * J.u_t;
    out.u_x = decay * (J.u_x + shift * e15);
    out.u_xx = decay * (J.u_xx - shift * e15);
    return out;
  };
}

std::vector<Subalgebra> optimal_system() {
  using Arr = std::array<double, 5>;
  auto fixed = [](Arr v) {
    return [v](std::mt19937_64&) { return v; };
  };
  auto pm = [](std::mt19937_64& rng) { return rng() % 2 ? 1.0 : -1.0; };

  std::vector<Subalgebra> out;
  out.push_back({"X1", "", false, fixed({1, 0, 0, 0, 0})});
  out.push_back({"X2", "", true, fixed({0, 1, 0, 0, 0})});
  out.push_back({"X3", "", false, fixed({0, 0, 1, 0, 0})});
  out.push_back({"X4", "", true, fixed({0, 0, 0, 1, 0})});
  out.push_back({"X5", "", false, fixed({0, 0, 0, 0, 1})});
  out.push_back({"X1 + eps X3", "eps = +-1", false, [pm](std::mt19937_64& rng) {
                   return Arr{1, 0, pm(rng), 0, 0};
                 }});
  out.push_back({"X1 + eps X4", "eps = +-1", false, [pm](std::mt19937_64& rng) {
                   return Arr{1, 0, 0, pm(rng), 0};
                 }});
  out.push_back({"X2 + eps X3", "eps = +-1", false, [pm](std::mt19937_64& rng) {
                   return Arr{0, 1, pm(rng), 0, 0};
                 }});
  out.push_back({"X2 + eps X4", "eps = +-1", true, [pm](std::mt19937_64& rng) {
                   return Arr{0, 1, 0, pm(rng), 0};
                 }});
  out.push_back({"X3 + eps X4", "eps = +-1", false, [pm](std::mt19937_64& rng) {
                   return Arr{0, 0, 1, pm(rng), 0};
                 }});
  out.push_back({"X1 + y (eps1 X3 + eps2 X4)", "y > 0, eps1 = +-1, eps2 = +-1", false,
                 [pm](std::mt19937_64& rng) {
                   std::uniform_real_distribution<double> ud(0.2, 2.0);
                   const double y = ud(rng);
                   return Arr{1, 0, y * pm(rng), y * pm(rng), 0};
                 }});
  out.push_back({"X2 + sin(phi) (eps1 X3 + eps2 X4)",
                 "0 < phi < pi/2, eps1 = +-1, eps2 = +-1", false,
                 [pm](std::mt19937_64& rng) {
                   std::uniform_real_distribution<double> ud(0.15, 1.4);
                   const double sp = std::sin(ud(rng));
                   return Arr{0, 1, sp * pm(rng), sp * pm(rng), 0};
                 }});
  out.push_back({"X5 + z X1", "z != 0, -1", false, [](std::mt19937_64& rng) {
                   std::uniform_real_distribution<double> ud(0.3, 2.0);
                   double z = ud(rng);
                   if (rng() % 2) z = -z - 0.5;  // also probe z < -1
                   return Arr{z, 0, 0, 0, 1};
                 }});
  out.push_back({"X5 - X1 + eps X2", "eps = +-1", false, [pm](std::mt19937_64& rng) {
                   return Arr{-1, pm(rng), 0, 0, 1};
                 }});
  return out;
}

CertificateReport invariance_certificate(
    const std::vector<FlowMap>& flows, const std::vector<std::string>& flow_names,
    const std::vector<std::pair<catalog::FamilyId, catalog::FamilyConstants>>& solutions,
    const GridSpec& grid) {
  const ModelParams dummy(1.0, 1.0, 0.0);  // T2 families ignore parameters
  CertificateReport report;
  for (size_t fi = 0; fi < flows.size(); ++fi) {
    for (const auto& [id, consts] : solutions) {
      JetEvaluator base = catalog::evaluator(id, dummy, consts);
      JetEvaluator flowed = apply_flow(flows[fi], base);
      double worst = 0.0;
      for (int i = 0; i < grid.nt; ++i) {
        const double t = grid.t0 + (grid.t1 - grid.t0) * i / std::max(1, grid.nt - 1);
        for (int j = 0; j < grid.nx; ++j) {
          const double x =
              grid.x_lo + (grid.x_hi - grid.x_lo) * j / std::max(1, grid.nx - 1);
          worst = std::max(worst, canonical_residual_relative(flowed(t, x)));
        }
      }
      CertificateEntry entry;
      entry.generator = fi < flow_names.size() ? flow_names[fi] : "flow";
      entry.family = id;
      entry.s = flows[fi].s;
      entry.max_rel_residual = worst;
      report.worst = std::max(report.worst, worst);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace symmetry
}  // namespace nlbs
