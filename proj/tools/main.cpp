// Command-line front end: every verification workflow behind one binary,
// emitting machine-readable CSV.
//
// Exit codes: 0 ok, 2 domain/constraint violation, 3 symmetry-table
// mismatch, 4 negative radicand at the start of an integration, 5 blowup.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "nlbs/catalog.hpp"
#include "nlbs/config.hpp"
#include "nlbs/csv.hpp"
#include "nlbs/fdsolver.hpp"
#include "nlbs/reduce.hpp"
#include "nlbs/symmetry.hpp"
#include "nlbs/transform.hpp"

using namespace nlbs;
using catalog::FamilyConstants;
using catalog::FamilyId;
using catalog::Table;

namespace {

struct TableMismatch : Error {
  using Error::Error;
};

struct Output {
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw Error("empty numeric list: " + text);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

// Rows whose generating reduction pins the sign of eps.
int pinned_eps(const FamilyId& id) {
  if (id.table != Table::T2) return 0;
  if (id.row == 6 || id.row == 8 || id.row == 9) return -1;
  if (id.row == 10) return 1;
  return 0;
}

GridSpec default_scan_grid(const FamilyId& id, const ModelParams& mp,
                           const FamilyConstants& fc) {
  GridSpec g;
  g.nx = 50;
  g.nt = 50;
  if (id.table == Table::T2) {
    g.t0 = 0.1;
    g.t1 = 2.0;
    g.x_lo = -2.0;
    g.x_hi = 2.0;
    if (id.row == 9) {
      g.x_lo = -std::log(fc.k) + 1e-3;
      g.x_hi = g.x_lo + 3.0;
    } else if (id.row == 10) {
      g.x_hi = -std::log(fc.k) - 1e-3;
      g.x_lo = g.x_hi - 3.0;
    }
    return g;
  }
  g.t0 = 0.1;
  g.t1 = id.table == Table::T4 ? 0.6 : 1.5;
  g.x_lo = 0.3;
  g.x_hi = 3.0;
  if (id.table == Table::T3 && id.row == 7) {
    g.x_lo = mp.b / fc.k + 1e-3;
    g.x_hi = g.x_lo + 3.0;
  } else if (id.table == Table::T3 && id.row == 8) {
    g.x_hi = mp.b / fc.k - 1e-3;
    g.x_lo = 0.05 * g.x_hi;
  } else if (id.table == Table::T4 && id.row == 7) {
    g.x_lo = mp.b / (fc.k * mp.c) * std::exp(mp.c * g.t1) * 1.001;
    g.x_hi = g.x_lo + 3.0;
  } else if (id.table == Table::T4 && id.row == 8) {
    g.x_hi = mp.b / (fc.k * mp.c) * std::exp(mp.c * g.t0) * 0.999;
    g.x_lo = 0.02 * g.x_hi;
  }
  return g;
}

int parse_generator(const std::string& name) {
  if (name.size() == 2 && name[0] == 'X' && name[1] >= '1' && name[1] <= '5')
    return name[1] - '0';
  throw DomainViolation("generator must be one of X1..X5, got " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for a nonlinear Black-Scholes equation"};
  app.require_subcommand(1);

  // --config is applied before regular parsing so flags override file values
  std::string config_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  double tol = cfg.number("tolerances.tol").value_or(1e-9);
  std::uint64_t seed = 0;
  std::string out_path;
  app.add_option("--tol", tol, "acceptance tolerance for residual checks");
  app.add_option("--seed", seed, "seed for sampled grids and constants");
  app.add_option("--out", out_path, "write CSV output to this path instead of stdout");
  app.add_option("--config", config_path, "INI config file ([model] [family] [grid] [tolerances])")
      ->expected(1);

  double pa = cfg.number("model.a").value_or(1.0);
  double pb = cfg.number("model.b").value_or(1.0);
  double pc = cfg.number("model.c").value_or(0.0);
  std::string family_text = cfg.text("family.id").value_or("");
  FamilyConstants consts;
  consts.c1 = cfg.number("family.c1").value_or(0.0);
  consts.c2 = cfg.number("family.c2").value_or(0.0);
  consts.eps = cfg.sign("family.eps").value_or(1);
  consts.delta = cfg.sign("family.delta").value_or(1);
  consts.k = cfg.number("family.k").value_or(0.5);

  GridSpec grid;
  grid.x_lo = cfg.number("grid.x_lo").value_or(0.0);
  grid.x_hi = cfg.number("grid.x_hi").value_or(0.0);
  grid.nx = cfg.integer("grid.nx").value_or(0);
  grid.t0 = cfg.number("grid.t0").value_or(0.0);
  grid.t1 = cfg.number("grid.t1").value_or(0.0);
  grid.nt = cfg.integer("grid.nt").value_or(0);
  grid.safety = cfg.number("grid.safety").value_or(0.4);
  const bool cfg_has_grid = cfg.has("grid.x_lo") && cfg.has("grid.x_hi");

  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--a", pa, "equation coefficient a > 0");
    cmd->add_option("--b", pb, "equation coefficient b > 0");
    cmd->add_option("--c", pc, "equation coefficient c >= 0");
  };
  auto add_family_flags = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", family_text, "catalog family id, e.g. T2.5");
    if (required && family_text.empty()) opt->required();
    cmd->add_option("--c1", consts.c1, "constant c1");
    cmd->add_option("--c2", consts.c2, "constant c2");
    cmd->add_option("--eps", consts.eps, "sign eps (+1/-1)");
    cmd->add_option("--delta", consts.delta, "sign delta (+1/-1)");
    cmd->add_option("--k", consts.k, "constant k");
  };
  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--x-lo", grid.x_lo, "lower x bound");
    cmd->add_option("--x-hi", grid.x_hi, "upper x bound");
    cmd->add_option("--nx", grid.nx, "number of x nodes");
    cmd->add_option("--t0", grid.t0, "initial time");
    cmd->add_option("--t1", grid.t1, "final time");
    cmd->add_option("--nt", grid.nt, "number of t nodes");
    cmd->add_option("--safety", grid.safety, "time-step safety factor");
  };
  auto resolve_family = [&](CLI::App* cmd) -> FamilyId {
    if (family_text.empty()) throw DomainViolation("missing --family");
    const FamilyId id = catalog::parse_family_id(family_text);
    if (const int pin = pinned_eps(id); pin != 0 && cmd->count("--eps") == 0)
      consts.eps = pin;  // the generating reduction fixes the sign
    return id;
  };
  auto resolve_grid = [&](CLI::App* cmd, const GridSpec& fallback) {
    GridSpec g = fallback;
    if (cfg_has_grid || cmd->count("--x-lo")) g.x_lo = grid.x_lo;
    if (cfg_has_grid || cmd->count("--x-hi")) g.x_hi = grid.x_hi;
    if (grid.nx > 0) g.nx = grid.nx;
    if (cmd->count("--t0") || cfg.has("grid.t0")) g.t0 = grid.t0;
    if (cmd->count("--t1") || cfg.has("grid.t1")) g.t1 = grid.t1;
    if (grid.nt > 0) g.nt = grid.nt;
    g.safety = grid.safety;
    return g;
  };

  int rc = 0;

  // catalog list
  auto* cat = app.add_subcommand("catalog", "catalog manifest");
  auto* cat_list = cat->add_subcommand("list", "print the family manifest as CSV");
  std::string table_filter;
  cat_list->add_option("--table", table_filter, "restrict to one table (T2, T3, T4, EQ6, EQ7)");
  cat_list->callback([&] {
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"family_id", "constants_used", "domain_description", "owning_equation"});
    for (const auto& info : catalog::list_families()) {
      const std::string id = catalog::to_string(info.id);
      if (!table_filter.empty() && id.rfind(table_filter, 0) != 0) continue;
      std::string constants = info.constants_used;
      if (!info.closed_form) constants += " [unsolved-template]";
      csv.row({id, constants, info.domain, info.owning_equation});
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "residual scan of one catalog family");
  add_model_flags(verify);
  add_family_flags(verify, true);
  add_grid_flags(verify);
  verify->callback([&] {
    const FamilyId id = resolve_family(verify);
    const ModelParams mp(pa, pb, pc);
    catalog::validate_constants(id, mp, consts);
    const GridSpec g = resolve_grid(verify, default_scan_grid(id, mp, consts));
    const ResidualStats stats = catalog::residual_scan(id, mp, consts, g);
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"family_id", "max_abs", "max_rel", "evaluated", "excluded"});
    csv.row({catalog::to_string(id), csv_number(stats.max_abs), csv_number(stats.max_rel),
             std::to_string(stats.n_evaluated), std::to_string(stats.n_excluded)});
    if (stats.max_rel > tol) rc = 1;
  });

  // transform
  auto* trans = app.add_subcommand("transform", "apply the point transformation");
  bool forward = false, inverse = false, check = false;
  double pt_t = 0.0, pt_x = 1.0, pt_u = 0.0;
  trans->add_flag("--forward", forward, "price variables -> canonical variables");
  trans->add_flag("--inverse", inverse, "canonical variables -> price variables");
  trans->add_flag("--check", check, "also print the round-trip residual");
  add_model_flags(trans);
  trans->add_option("--t", pt_t, "time coordinate");
  trans->add_option("--x", pt_x, "space coordinate");
  trans->add_option("--u", pt_u, "value coordinate");
  trans->callback([&] {
    if (forward == inverse)
      throw DomainViolation("pass exactly one of --forward / --inverse");
    const ModelParams mp(pa, pb, pc);
    const SpacePoint p{pt_t, pt_x, pt_u};
    const SpacePoint q = forward ? to_canonical(mp, p) : from_canonical(mp, p);
    Output out(out_path);
    out.stream() << csv_number(q.t) << ' ' << csv_number(q.x) << ' '
                 << csv_number(q.u) << '\n';
    if (check) {
      const SpacePoint back = forward ? from_canonical(mp, q) : to_canonical(mp, q);
      const double resid = std::max(
          {std::fabs(back.t - p.t) / (1.0 + std::fabs(p.t)),
           std::fabs(back.x - p.x) / (1.0 + std::fabs(p.x)),
           std::fabs(back.u - p.u) / (1.0 + std::fabs(p.u))});
      out.stream() << "round-trip residual " << csv_number(resid) << '\n';
      if (resid > 1e-12) rc = 1;
    }
  });

  // symmetry
  auto* sym = app.add_subcommand("symmetry", "invariance algebra workflows");
  auto* sym_comm = sym->add_subcommand("commutators", "recover and print the commutator table");
  sym_comm->callback([&] {
    const symmetry::CommutatorTable table = symmetry::commutator_table();
    Output out(out_path);
    out.stream() << symmetry::commutator_table_csv(table);
    auto is = [&](int i, int j, int m, double want) {
      for (int n = 0; n < 5; ++n)
        if (std::fabs(table.coeff[i][j][n] - (n == m ? want : 0.0)) > 1e-8) return false;
      return true;
    };
    bool ok = is(0, 1, 1, 1.0) && is(1, 4, 1, -1.0) && is(2, 4, 2, 1.0) && is(3, 4, 3, -1.0);
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = 0; j < 5 && ok; ++j) {
        const bool printed = (i == 0 && j == 1) || (i == 1 && j == 0) ||
                             (i == 1 && j == 4) || (i == 4 && j == 1) ||
                             (i == 2 && j == 4) || (i == 4 && j == 2) ||
                             (i == 3 && j == 4) || (i == 4 && j == 3);
        if (printed) continue;
        for (int n = 0; n < 5; ++n)
          ok = ok && std::fabs(table.coeff[i][j][n]) <= 1e-8;
      }
    if (!ok) throw TableMismatch("recovered commutator table disagrees with the algebra");
  });

  auto* sym_opt = sym->add_subcommand("optimal-system", "print the 14 one-dimensional subalgebras");
  sym_opt->callback([&] {
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"subalgebra", "constraints", "invariant_solutions"});
    for (const auto& s : symmetry::optimal_system())
      csv.row({s.label, s.constraints, s.no_invariant_solution ? "none" : "yes"});
  });

  std::string gen_name = "X1";
  double flow_s = 0.5;
  auto* sym_certify = sym->add_subcommand("certify", "flow a catalog solution and check the residual");
  sym_certify->add_option("--gen", gen_name, "generator X1..X5");
  sym_certify->add_option("--s", flow_s, "group parameter");
  add_family_flags(sym_certify, false);
  add_grid_flags(sym_certify);
  sym_certify->callback([&] {
    const FamilyId id = resolve_family(sym_certify);
    const ModelParams mp(1.0, 1.0, 0.0);
    const GridSpec g = resolve_grid(sym_certify, GridSpec{-1.0, 2.0, 15, 0.2, 1.2, 15, 0.4});
    const auto report = symmetry::invariance_certificate(
        {symmetry::FlowMap::basis(parse_generator(gen_name), flow_s)}, {gen_name},
        {{id, consts}}, g);
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"generator", "family", "s", "max_rel_residual"});
    csv.row({gen_name, catalog::to_string(id), csv_number(flow_s),
             csv_number(report.worst)});
    // 1e-8 is the flow-invariance figure; an explicit --tol overrides it
    const double certify_tol = app.count("--tol") ? tol : 1e-8;
    if (report.worst > certify_tol) rc = 1;
  });

  auto* sym_flow = sym->add_subcommand("flow", "print a flowed solution on a grid");
  sym_flow->add_option("--gen", gen_name, "generator X1..X5");
  sym_flow->add_option("--s", flow_s, "group parameter");
  add_family_flags(sym_flow, false);
  add_grid_flags(sym_flow);
  sym_flow->callback([&] {
    const FamilyId id = resolve_family(sym_flow);
    const ModelParams mp(1.0, 1.0, 0.0);
    const GridSpec g = resolve_grid(sym_flow, GridSpec{-1.0, 2.0, 10, 0.2, 1.2, 10, 0.4});
    JetEvaluator flowed = symmetry::apply_flow(
        symmetry::FlowMap::basis(parse_generator(gen_name), flow_s),
        catalog::evaluator(id, mp, consts));
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"t", "x", "u", "residual"});
    for (int i = 0; i < g.nt; ++i)
      for (int j = 0; j < g.nx; ++j) {
        const double t = g.t0 + (g.t1 - g.t0) * i / std::max(1, g.nt - 1);
        const double x = g.x_lo + (g.x_hi - g.x_lo) * j / std::max(1, g.nx - 1);
        const Jet2 jet = flowed(t, x);
        csv.row_numbers({t, x, jet.u, canonical_residual(jet)});
      }
  });

  // reduce
  auto* red = app.add_subcommand("reduce", "integrate a reduced equation");
  int red_row = 3, red_eps = 1, red_sigma = 0;
  double red_k = 0.5, xi0 = 0.0, phi0 = 1.0, dphi0 = 0.0, xi1 = 1.0;
  double itol = 1e-10, max_step = 0.0;
  std::string against, subst_check;
  red->add_option("--row", red_row, "reduction row 1..11")->required();
  red->add_option("--eps", red_eps, "sign eps (+1/-1)");
  red->add_option("--k", red_k, "parameter k (rows 7, 8, 10)");
  red->add_option("--sigma", red_sigma, "sign branch (+1/-1); default from initial data");
  red->add_option("--xi0", xi0, "initial similarity value");
  red->add_option("--phi0", phi0, "initial phi");
  red->add_option("--dphi0", dphi0, "initial phi'");
  red->add_option("--xi1", xi1, "target similarity value");
  red->add_option("--itol", itol, "integrator tolerance");
  red->add_option("--max-step", max_step, "maximum step size (0 = automatic)");
  red->add_option("--against-family", against, "compare against a T2 closed form");
  red->add_option("--check", subst_check, "substitution check: ode11|ode12|ode13|ode14");
  red->callback([&] {
    const reduce::ReducedODE ode(red_row, red_eps, red_k);
    double p0 = phi0, dp0 = dphi0;
    FamilyId against_id{};
    FamilyConstants against_consts = consts;
    if (!against.empty()) {
      against_id = catalog::parse_family_id(against);
      if (const int pin = pinned_eps(against_id); pin != 0) against_consts.eps = pin;
      const reduce::Profile prof =
          reduce::closed_form_profile(against_id, against_consts, xi0);
      p0 = prof.phi;
      dp0 = prof.dphi;
      if (red_sigma == 0) red_sigma = reduce::matching_sigma(ode, prof);
    }
    if (red_sigma == 0) red_sigma = 1;
    const reduce::Trajectory traj =
        reduce::integrate(ode, red_sigma, xi0, p0, dp0, xi1, itol, max_step);

    reduce::DefectReport defects;
    bool has_subst = false;
    if (!subst_check.empty()) {
      has_subst = true;
      reduce::Substitution which;
      if (subst_check == "ode11") which = reduce::Substitution::Ode11;
      else if (subst_check == "ode12") which = reduce::Substitution::Ode12;
      else if (subst_check == "ode13") which = reduce::Substitution::Ode13;
      else if (subst_check == "ode14") which = reduce::Substitution::Ode14;
      else throw DomainViolation("unknown substitution check: " + subst_check);
      defects = reduce::substitution_check(which, traj);
    }

    double gap = 0.0;
    if (!against.empty()) {
      for (size_t i = 0; i < traj.xi.size(); ++i) {
        const reduce::Profile ref =
            reduce::closed_form_profile(against_id, against_consts, traj.xi[i]);
        gap = std::max(gap, std::fabs(traj.phi[i] - ref.phi));
      }
    }

    Output out(out_path);
    CsvWriter csv(out.stream());
    std::vector<std::string> head{"xi", "phi", "dphi", "sigma"};
    if (has_subst) {
      head.push_back("z");
      head.push_back("w");
    }
    csv.header(head);
    for (size_t i = 0; i < traj.xi.size(); ++i) {
      std::vector<double> row{traj.xi[i], traj.phi[i], traj.dphi[i],
                              static_cast<double>(traj.sigma)};
      if (has_subst) {
        row.push_back(defects.z[i]);
        row.push_back(defects.w[i]);
      }
      csv.row_numbers(row);
    }
    std::cerr << "accepted " << traj.accepted << ", rejected " << traj.rejected
              << (traj.radicand_stop ? ", halted at a radicand boundary" : "") << "\n";
    if (!against.empty()) {
      std::cerr << "max gap against " << against << ": " << csv_number(gap) << "\n";
      if (gap > 1e-8) rc = 1;
    }
    if (has_subst) {
      std::cerr << "max " << subst_check << " defect: " << csv_number(defects.max_defect)
                << "\n";
      if (defects.max_defect > 1e-7) rc = 1;
    }
  });

  // fd
  auto* fdc = app.add_subcommand("fd", "manufactured-solution convergence study");
  std::string equation = "canonical", ladder_text = "41,81,161";
  fdc->add_option("--equation", equation, "canonical or bse");
  add_model_flags(fdc);
  add_family_flags(fdc, true);
  add_grid_flags(fdc);
  fdc->add_option("--ladder", ladder_text, "comma-separated nx levels");
  fdc->callback([&] {
    const FamilyId id = resolve_family(fdc);
    const ModelParams mp(pa, pb, pc);
    fd::Equation eq;
    if (equation == "canonical") eq = fd::Equation::Canonical;
    else if (equation == "bse") eq = fd::Equation::Bse;
    else throw DomainViolation("unknown equation: " + equation);
    const GridSpec fallback = eq == fd::Equation::Canonical
                                  ? GridSpec{-1.0, 2.0, 0, 0.1, 0.6, 1, 0.4}
                                  : GridSpec{0.5, 3.0, 0, 0.1, 0.5, 1, 0.4};
    const GridSpec box = resolve_grid(fdc, fallback);
    const auto result =
        fd::convergence_order(eq, mp, id, consts, box, parse_int_list(ladder_text));
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"nx", "dx", "max_error"});
    for (const auto& level : result.levels)
      csv.row_numbers({static_cast<double>(level.nx), level.dx, level.max_error});
    std::cerr << (result.degenerate
                      ? std::string("degenerate: errors at the scheme's defect floor")
                      : "fitted order " + csv_number(result.order))
              << "\n";
    if (!result.degenerate && (result.order < 1.7 || result.order > 2.3)) rc = 1;
  });

  // taylor
  auto* tay = app.add_subcommand("taylor", "volatility Taylor-gap sweep");
  std::string kind_text = "reduced-form", rho_text = "1e-2,5e-3,2.5e-3";
  double t_sigma = 1.0, t_S = 1.0, t_uS = 1.0, t_uSS = 1.0;
  tay->add_option("--kind", kind_text, "transaction-cost | reduced-form | equilibrium");
  tay->add_option("--rho", rho_text, "comma-separated rho sweep");
  tay->add_option("--sigma", t_sigma, "constant volatility");
  tay->add_option("--S", t_S, "stock price");
  tay->add_option("--uS", t_uS, "first derivative u_S");
  tay->add_option("--uSS", t_uSS, "second derivative u_SS");
  tay->callback([&] {
    VolatilityModelKind kind;
    if (kind_text == "transaction-cost") kind = VolatilityModelKind::TransactionCost;
    else if (kind_text == "reduced-form") kind = VolatilityModelKind::ReducedForm;
    else if (kind_text == "equilibrium") kind = VolatilityModelKind::Equilibrium;
    else throw DomainViolation("unknown volatility kind: " + kind_text);

    std::vector<double> rhos = parse_list(rho_text);
    std::sort(rhos.rbegin(), rhos.rend());
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"rho", "gap", "halving_ratio"});
    bool all_zero = true;
    double last_ratio = 0.0;
    for (double rho : rhos) {
      const double gap = taylor_gap(kind, t_sigma, rho, t_S, t_uS, t_uSS);
      const double half = taylor_gap(kind, t_sigma, rho / 2.0, t_S, t_uS, t_uSS);
      all_zero = all_zero && gap == 0.0;
      last_ratio = half > 0.0 ? gap / half : 0.0;
      csv.row_numbers({rho, gap, last_ratio});
    }
    if (!all_zero && (last_ratio < 3.6 || last_ratio > 4.4)) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const TableMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotInSpan& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NegativeRadicand& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Blowup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
