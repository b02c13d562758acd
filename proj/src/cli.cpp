#include "diamond/config.hpp"

#include "diamond/io.hpp"
#include "diamond/min.hpp"
#include "diamond/presets.hpp"
#include "diamond/selftest.hpp"
#include "diamond/transfer.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace diamond {

namespace {

std::string param_note(const ModelParams &p) {
  return "params: J=" + format_double(p.J) + " J1=" + format_double(p.J1) +
         " delta=" + format_double(p.delta) + " D=" + format_double(p.D) +
         " h=" + format_double(p.h) + " T=" + format_double(p.T);
}

Table spectrum_table(const RunConfig &rc) {
  Table t;
  t.comments = {"command: spectrum", param_note(rc.params),
                "levels ordered by role: both-up, lower and upper transverse"
                " combination, both-down"};
  t.columns = {"mu_i",       "mu_ip1",      "level_00", "level_xy_lo", "level_xy_hi",
               "level_11",   "eta",         "a_re",     "a_im"};
  std::vector<IsingPair> pairs;
  if (rc.pair == "all")
    pairs = {IsingPair::up_up(), IsingPair::up_down(), IsingPair::down_up(),
             IsingPair::down_down()};
  else
    pairs = {{rc.pair[0] == '+' ? 0.5 : -0.5, rc.pair[1] == '+' ? 0.5 : -0.5}};
  bool trivial_xy = false;
  for (const auto &pr : pairs) {
    const BlockSpectrum sp = block_spectrum(rc.params, pr);
    trivial_xy = sp.a_degenerate;
    t.rows.push_back({pr.mu_i, pr.mu_ip1, sp.lambdas[0], sp.lambdas[1], sp.lambdas[2],
                      sp.lambdas[3], sp.eta, sp.a.real(), sp.a.imag()});
  }
  if (trivial_xy)
    t.comments.push_back("note: transverse sector is trivial here (J = D = 0),"
                         " the phase column is fixed to 1");
  return t;
}

Table state_table(const RunConfig &rc) {
  const ThermalState st = thermal_state(rc.params);
  Table t;
  t.comments = {"command: state", param_note(rc.params)};
  t.columns = {"rho11", "rho22", "rho33", "rho44", "rho23_re", "rho23_im"};
  t.rows = {{st.diag(0), st.diag(1), st.diag(2), st.diag(3), st.rho23().real(),
             st.rho23().imag()}};
  return t;
}

Table min_table(const RunConfig &rc) {
  const MinResult r = min_xstate(thermal_state(rc.params));
  Table t;
  t.comments = {"command: min", param_note(rc.params)};
  if (r.maximizer_degenerate)
    t.comments.push_back("note: balanced marginal, values quoted for the z-axis"
                         " measurement");
  t.columns = {"N1", "N2", "degenerate"};
  t.rows = {{r.n1, r.n2, r.maximizer_degenerate ? 1.0 : 0.0}};
  return t;
}

Table sweep_table(const RunConfig &rc, Exec exec) {
  SweepSpec spec;
  spec.axes = rc.sweep_axes;
  spec.fixed = rc.params;
  spec.observable = rc.observable;
  const SweepResult r = sweep(spec, exec);

  Table t;
  t.comments = {"command: sweep", param_note(rc.params)};
  for (const auto &ax : r.axes)
    t.columns.push_back(ax.name);
  t.columns.push_back(std::string(observable_name(r.observable)));

  if (r.axes.size() == 1) {
    const Axis &ax = r.axes[0];
    for (int k = 0; k < ax.steps; ++k)
      t.rows.push_back({axis_value(ax, k), r.values[k]});
  } else {
    const Axis &a0 = r.axes[0];
    const Axis &a1 = r.axes[1];
    t.comments.push_back("row order: " + a0.name + " outermost");
    for (int i = 0; i < a0.steps; ++i)
      for (int j = 0; j < a1.steps; ++j)
        t.rows.push_back({axis_value(a0, i), axis_value(a1, j),
                          r.values[static_cast<std::size_t>(i) * a1.steps + j]});
  }
  return t;
}

Table boundary_table(const RunConfig &rc, Exec exec) {
  const BoundaryCurve curve = threshold_boundary(rc.scan_axis, rc.root_axis, rc.params,
                                                 rc.epsilon, exec);
  Table t;
  t.comments = {"command: boundary", param_note(rc.params),
                "epsilon = " + format_double(curve.epsilon)};
  t.columns = {curve.scan_name, curve.root_name + "_threshold"};
  for (const auto &pt : curve.points)
    t.rows.push_back({pt[0], pt[1]});
  if (!curve.no_crossing.empty()) {
    std::string note = "no crossing for " + curve.scan_name + " =";
    for (double v : curve.no_crossing)
      note += " " + format_double(v);
    t.comments.push_back(note);
  }
  return t;
}

void emit_table(const RunConfig &rc, Table t) {
  t.comments.insert(t.comments.begin(), std::string("diamond-min ") + kVersion);
  const auto write = [&](std::ostream &os) {
    if (rc.format == OutputFormat::csv)
      write_csv(os, t);
    else
      write_jsonl(os, t);
  };
  if (rc.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(rc.out);
  if (!file)
    throw std::runtime_error("cannot open output file: " + rc.out);
  write(file);
}

} // namespace

int run_cli(int argc, const char *const *argv) {
  RunConfig rc;
  try {
    rc = parse_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const ConfigError &e) {
    if (e.code == 0) {
      std::cout << e.what();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return e.code;
  }

  const Exec exec = rc.serial ? Exec::serial : Exec::parallel;
  try {
    switch (rc.command) {
    case Command::spectrum:
      emit_table(rc, spectrum_table(rc));
      break;
    case Command::state:
      emit_table(rc, state_table(rc));
      break;
    case Command::min:
      emit_table(rc, min_table(rc));
      break;
    case Command::sweep:
      emit_table(rc, sweep_table(rc, exec));
      break;
    case Command::boundary:
      emit_table(rc, boundary_table(rc, exec));
      break;
    case Command::figure:
      if (rc.list_presets) {
        for (const auto &name : preset_names())
          std::cout << name << "\n";
        return 0;
      }
      emit_table(rc, run_figure(rc.preset, exec));
      break;
    case Command::selftest: {
      const SelftestReport rep = run_selftest(rc.seed, exec);
      std::cout << rep.text;
      return rep.passed ? 0 : 1;
    }
    }
    return 0;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace diamond
