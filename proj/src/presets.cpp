#include "diamond/presets.hpp"

#include "diamond/analysis.hpp"

#include <initializer_list>
#include <stdexcept>

namespace diamond {

namespace {

ModelParams with(double J, double J1, double delta, double D, double h, double T) {
  ModelParams p;
  p.J = J;
  p.J1 = J1;
  p.delta = delta;
  p.D = D;
  p.h = h;
  p.T = T;
  return p;
}

// one sweep line appended as rows (labels..., axis value, observable)
void append_profile(Table &t, const std::vector<double> &labels, const Axis &axis,
                    const ModelParams &fixed, Observable obs, Exec exec) {
  SweepSpec spec;
  spec.axes = {axis};
  spec.fixed = fixed;
  spec.observable = obs;
  const SweepResult r = sweep(spec, exec);
  for (int k = 0; k < axis.steps; ++k) {
    std::vector<double> row = labels;
    row.push_back(axis_value(axis, k));
    row.push_back(r.values[k]);
    t.rows.push_back(std::move(row));
  }
}

// anisotropy profiles at several antisymmetric-exchange strengths,
// two temperatures per table
Table anisotropy_family(double t_low, double t_high, Observable obs, Exec exec) {
  Table t;
  t.comments = {std::string(observable_name(obs)) +
                    " across the intra-dimer anisotropy; series columns: D, T",
                "fixed: J=1, J1=1, h=1"};
  t.columns = {"D", "T", "delta", std::string(observable_name(obs))};
  const Axis axis{"delta", 0.0, 2.0, 401};
  for (double d : {0.0, 1.0, 2.0})
    for (double temp : {t_low, t_high})
      append_profile(t, {d, temp}, axis, with(1, 1, 1, d, 1, temp), obs, exec);
  return t;
}

Table thermal_profiles(Exec exec) {
  Table t;
  t.comments = {"N1 against temperature for several anisotropy values",
                "fixed: J=1, J1=1, h=1, D=0"};
  t.columns = {"delta", "T", "N1"};
  const Axis axis{"T", 0.02, 2.0, 199};
  for (double dd : {0.5, 1.0, 1.5, 2.0})
    append_profile(t, {dd}, axis, with(1, 1, dd, 0, 1, 0.2), Observable::n1, exec);
  return t;
}

Table density_map(const Axis &outer, const Axis &inner, const ModelParams &fixed,
                  std::vector<std::string> comments, Exec exec) {
  SweepSpec spec;
  spec.axes = {outer, inner};
  spec.fixed = fixed;
  spec.observable = Observable::n1;
  const SweepResult r = sweep(spec, exec);
  Table t;
  t.comments = std::move(comments);
  t.columns = {outer.name, inner.name, "N1"};
  for (int i = 0; i < outer.steps; ++i)
    for (int j = 0; j < inner.steps; ++j)
      t.rows.push_back({axis_value(outer, i), axis_value(inner, j),
                        r.values[static_cast<std::size_t>(i) * inner.steps + j]});
  return t;
}

Table threshold_family(const Axis &scan, const Axis &root, ModelParams fixed,
                       std::vector<std::string> comments, Exec exec) {
  Table t;
  t.comments = std::move(comments);
  t.comments.push_back("epsilon = 0.0001; root axis " + root.name + " in [" +
                       format_double(root.lo) + ", " + format_double(root.hi) + "]");
  t.columns = {"D", scan.name, root.name + "_threshold"};
  for (double d : {0.0, 0.5, 0.8, 1.0}) {
    fixed.D = d;
    const BoundaryCurve curve = threshold_boundary(scan, root, fixed, 1e-4, exec);
    for (const auto &pt : curve.points)
      t.rows.push_back({d, pt[0], pt[1]});
    if (!curve.no_crossing.empty()) {
      std::string note = "no crossing at D=" + format_double(d) + " for " + scan.name + " =";
      for (double v : curve.no_crossing)
        note += " " + format_double(v);
      t.comments.push_back(note);
    }
  }
  return t;
}

Table field_profiles(Exec exec) {
  Table t;
  t.comments = {"N1 against the longitudinal field at several temperatures",
                "fixed: J=1, J1=1, delta=1, D=1"};
  t.columns = {"T", "h", "N1"};
  const Axis axis{"h", 0.0, 5.0, 251};
  for (double temp : {0.1, 0.2, 0.5, 1.0})
    append_profile(t, {temp}, axis, with(1, 1, 1, 1, 1, temp), Observable::n1, exec);
  return t;
}

Table anisotropy_field_boundary(Exec exec) {
  Table t;
  t.comments = {"field threshold of the N1 = epsilon level set against anisotropy,"
                " for comparison with the linear crossover estimate",
                "fixed: J=1, J1=1, D=0, T=0.1", "epsilon = 0.0001"};
  t.columns = {"delta", "h_threshold"};
  const Axis scan{"delta", 0.0, 2.0, 101};
  const Axis root{"h", 0.0, 4.0, 64};
  const BoundaryCurve curve =
      threshold_boundary(scan, root, with(1, 1, 1, 0, 1, 0.1), 1e-4, exec);
  for (const auto &pt : curve.points)
    t.rows.push_back({pt[0], pt[1]});
  if (!curve.no_crossing.empty()) {
    std::string note = "no crossing for delta =";
    for (double v : curve.no_crossing)
      note += " " + format_double(v);
    t.comments.push_back(note);
  }
  return t;
}

} // namespace

std::vector<std::string> preset_names() {
  return {"fig1a", "fig1b", "fig1c", "fig1d", "fig3",  "fig4a",        "fig4b",
          "fig5a", "fig5b", "fig6a", "fig6b", "fig7",  "phase-delta-h"};
}

Table run_figure(const std::string &name, Exec exec) {
  Table t;
  if (name == "fig1a") {
    t = anisotropy_family(0.15, 0.2, Observable::n1, exec);
  } else if (name == "fig1b") {
    t = anisotropy_family(0.15, 0.2, Observable::dn1_ddelta, exec);
  } else if (name == "fig1c") {
    t = anisotropy_family(0.1, 0.25, Observable::n1, exec);
  } else if (name == "fig1d") {
    t = anisotropy_family(0.1, 0.25, Observable::dn1_ddelta, exec);
  } else if (name == "fig3") {
    t = thermal_profiles(exec);
  } else if (name == "fig4a" || name == "fig4b") {
    const double d = name == "fig4b" ? 1.0 : 0.0;
    t = density_map(Axis{"J1", -3.0, 3.0, 121}, Axis{"h", 0.0, 4.0, 81},
                    with(1, 1, 1, d, 1, 0.5),
                    {"N1 over the node-coupling / field plane",
                     "fixed: J=1, delta=1, T=0.5, D=" + format_double(d)},
                    exec);
  } else if (name == "fig5a" || name == "fig5b") {
    const double d = name == "fig5b" ? 1.0 : 0.0;
    t = density_map(Axis{"delta", 0.0, 2.0, 101}, Axis{"T", 0.02, 1.0, 99},
                    with(1, 1, 1, d, 1, 0.5),
                    {"N1 over the anisotropy / temperature plane",
                     "fixed: J=1, J1=1, h=1, D=" + format_double(d)},
                    exec);
  } else if (name == "fig6a") {
    t = threshold_family(Axis{"J1", -3.0, 3.0, 121}, Axis{"T", 0.02, 3.0, 64},
                         with(1, 1, 1, 0, 1, 0.5),
                         {"temperature threshold of the N1 = epsilon level set against"
                          " the node coupling, one curve per D",
                          "fixed: J=1, delta=1, h=1"},
                         exec);
  } else if (name == "fig6b") {
    t = threshold_family(Axis{"h", 0.0, 4.0, 161}, Axis{"T", 0.02, 3.0, 64},
                         with(1, 1, 1, 0, 1, 0.5),
                         {"temperature threshold of the N1 = epsilon level set against"
                          " the longitudinal field, one curve per D",
                          "fixed: J=1, J1=1, delta=1"},
                         exec);
  } else if (name == "fig7") {
    t = field_profiles(exec);
  } else if (name == "phase-delta-h") {
    t = anisotropy_field_boundary(exec);
  } else {
    std::string msg = "unknown preset '" + name + "'; available:";
    for (const auto &n : preset_names())
      msg += " " + n;
    throw std::invalid_argument(msg);
  }
  t.comments.insert(t.comments.begin(), "preset: " + name);
  return t;
}

} // namespace diamond
