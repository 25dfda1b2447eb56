#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landau/collision.hpp"
#include "landau/config.hpp"
#include "landau/dynamics.hpp"
#include "landau/equilibrium.hpp"
#include "landau/errors.hpp"
#include "landau/functionals.hpp"
#include "landau/parallel.hpp"
#include "landau/species.hpp"
#include "landau/sphere.hpp"

namespace py = pybind11;
using namespace landau;

namespace {

Vec to_vec(const std::vector<double>& v, int dim, const char* what) {
  if (static_cast<int>(v.size()) != dim)
    throw ParameterError(std::string(what) + ": expected " + std::to_string(dim) +
                         " components");
  Vec out = vec0();
  for (int c = 0; c < dim; ++c) out[c] = v[static_cast<size_t>(c)];
  return out;
}

py::array_t<double> field_array(const GridField& f) {
  // note: the scalar-count array_t constructors misbehave with this
  // pybind11; always pass an explicit shape vector
  return py::array_t<double>(
      std::vector<py::ssize_t>{static_cast<py::ssize_t>(f.values.size())},
      f.values.data());
}

std::vector<double> array_values(const py::array_t<double, py::array::c_style>& a,
                                 std::int64_t expected) {
  if (a.size() != expected)
    throw ParameterError("field: expected " + std::to_string(expected) + " values");
  return std::vector<double>(a.data(), a.data() + a.size());
}

py::dict moments_dict(const Moments& m, int dim) {
  py::dict d;
  d["n"] = m.n;
  d["P"] = std::vector<double>(m.P.begin(), m.P.begin() + dim);
  d["E"] = m.E;
  d["rho"] = m.rho;
  d["u"] = std::vector<double>(m.u.begin(), m.u.begin() + dim);
  d["theta"] = m.theta;
  return d;
}

py::dict breakdown_dict(const DissipationBreakdown& b) {
  py::dict d;
  py::list pairs;
  for (const PairBreakdown& p : b.pairs) {
    py::dict e;
    e["i"] = p.i;
    e["j"] = p.j;
    e["prefactor"] = p.prefactor;
    e["d_parallel"] = p.d_parallel;
    e["d_radial"] = p.d_radial;
    e["d_spherical"] = p.d_spherical;
    e["r_spherical"] = p.r_spherical;
    pairs.append(e);
  }
  d["pairs"] = pairs;
  d["total"] = b.total;
  return d;
}

py::dict record_dict(const DiagnosticsRecord& r, int dim) {
  py::dict d;
  d["t"] = r.time;
  d["moments"] = moments_dict(r.mom, dim);
  d["H"] = r.H;
  d["I"] = r.I;
  d["entropy_dissipation"] = r.entropy_dissipation;
  d["fisher_dissipation"] = r.fisher_dissipation;
  d["fisher_dissipation_xi"] = r.fisher_dissipation_xi;
  d["breakdown"] = breakdown_dict(r.breakdown);
  d["clamped_nodes"] = r.clamped_node_count;
  d["clamped_mass"] = r.clamped_mass;
  return d;
}

RunConfig run_config(const std::string& flow, const std::string& scheme, double dt,
                     double t_end, int diagnostics_every, double floor,
                     bool deterministic_reduction) {
  RunConfig rc;
  if (flow == "landau") rc.flow = Flow::landau;
  else if (flow == "fokker_planck") rc.flow = Flow::fokker_planck;
  else throw ParameterError("flow must be 'landau' or 'fokker_planck'");
  if (scheme == "euler") rc.scheme = Scheme::euler;
  else if (scheme == "rk4") rc.scheme = Scheme::rk4;
  else throw ParameterError("scheme must be 'euler' or 'rk4'");
  rc.dt = dt;
  rc.t_end = t_end;
  rc.diagnostics_every = diagnostics_every;
  rc.floor = floor;
  rc.deterministic_reduction = deterministic_reduction;
  return rc;
}

}  // namespace

PYBIND11_MODULE(_landaulab, m) {
  m.doc() = "multi-species Landau kinetics laboratory";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<VelocityGrid>(m, "VelocityGrid")
      .def_readonly("dim", &VelocityGrid::dim)
      .def_readonly("extent", &VelocityGrid::extent)
      .def_readonly("points_per_axis", &VelocityGrid::points_per_axis)
      .def_readonly("spacing", &VelocityGrid::spacing)
      .def_property_readonly("size", [](const VelocityGrid& g) { return g.size(); });

  py::class_<SpeciesSet>(m, "SpeciesSet")
      .def_readonly("count", &SpeciesSet::count)
      .def_readonly("dim", &SpeciesSet::dim)
      .def_readonly("masses", &SpeciesSet::masses);

  py::class_<MixtureState>(m, "MixtureState")
      .def_readonly("time", &MixtureState::time)
      .def_readonly("floor", &MixtureState::floor)
      .def_property_readonly("fields",
                             [](const MixtureState& s) {
                               py::list out;
                               for (const auto& f : s.fields) out.append(field_array(f));
                               return out;
                             })
      .def_property_readonly("grid", [](const MixtureState& s) { return s.grid; })
      .def_property_readonly("species", [](const MixtureState& s) { return s.species; });

  m.def("make_grid", &make_grid, py::arg("dim"), py::arg("extent"),
        py::arg("points_per_axis"));
  m.def("make_species_set", &make_species_set, py::arg("masses"), py::arg("couplings"),
        py::arg("exponents"), py::arg("dim"));

  m.def(
      "make_state",
      [](const SpeciesSet& species, const VelocityGrid& grid, const py::list& fields,
         double floor) {
        std::vector<GridField> fs;
        for (const auto& o : fields) {
          GridField f = make_field(grid);
          f.values = array_values(o.cast<py::array_t<double, py::array::c_style>>(),
                                  grid.size());
          fs.push_back(std::move(f));
        }
        return make_state(species, grid, std::move(fs), floor);
      },
      py::arg("species"), py::arg("grid"), py::arg("fields"), py::arg("floor") = 1e-30);

  m.def(
      "maxwellian",
      [](const VelocityGrid& grid, double mass, double n, const std::vector<double>& u,
         double theta) {
        return field_array(maxwellian(grid, mass, MacroState{n, to_vec(u, grid.dim, "u"), theta}));
      },
      py::arg("grid"), py::arg("mass"), py::arg("n"), py::arg("u"), py::arg("theta"));

  m.def("moments",
        [](const MixtureState& s) { return moments_dict(moments(s), s.grid.dim); });
  m.def("entropy", &entropy);
  m.def("fisher", &fisher);
  m.def("entropy_dissipation", &entropy_dissipation);
  m.def("fisher_dissipation",
        [](const MixtureState& s) { return fisher_dissipation(s); });
  m.def("fisher_dissipation_xi", &fisher_dissipation_xi);
  m.def("dissipation_breakdown", [](const MixtureState& s) {
    return breakdown_dict(dissipation_breakdown(s));
  });
  m.def("diagnostics",
        [](const MixtureState& s) { return record_dict(diagnostics(s), s.grid.dim); });

  m.def("collision_pair", [](const MixtureState& s, int i, int j) {
    return field_array(collision_pair(s, i, j));
  });
  m.def("rhs", [](const MixtureState& s) {
    py::list out;
    for (const auto& f : rhs(s)) out.append(field_array(f));
    return out;
  });

  m.def(
      "step",
      [](const MixtureState& s, const std::string& flow, const std::string& scheme,
         double dt) {
        return step(s, run_config(flow, scheme, dt, dt, 1, s.floor, true));
      },
      py::arg("state"), py::arg("flow") = "landau", py::arg("scheme") = "rk4",
      py::arg("dt") = 1e-3);

  m.def(
      "run",
      [](const MixtureState& s, const std::string& flow, const std::string& scheme,
         double dt, double t_end, int diagnostics_every, bool deterministic_reduction) {
        const RunResult rr = run(s, run_config(flow, scheme, dt, t_end, diagnostics_every,
                                               s.floor, deterministic_reduction));
        py::list out;
        for (const auto& r : rr.records) out.append(record_dict(r, s.grid.dim));
        py::dict d;
        d["records"] = out;
        d["clamping_flagged"] = rr.clamping_flagged;
        return d;
      },
      py::arg("state"), py::arg("flow") = "landau", py::arg("scheme") = "rk4",
      py::arg("dt") = 1e-3, py::arg("t_end") = 0.0, py::arg("diagnostics_every") = 1,
      py::arg("deterministic_reduction") = true);

  m.def("suggest_dt", [](const MixtureState& s, const std::string& flow, double dt_cap) {
    return suggest_dt(s, run_config(flow, "euler", dt_cap, dt_cap, 1, s.floor, true));
  }, py::arg("state"), py::arg("flow") = "landau", py::arg("dt_cap") = 1.0);

  m.def("admissible_threshold", &admissible_threshold, py::arg("dim"),
        py::arg("same_species"));
  m.def("check_admissibility", [](const SpeciesSet& s, int dim) {
    py::list out;
    for (const auto& v : check_admissibility(s, dim)) {
      py::dict d;
      d["i"] = v.i;
      d["j"] = v.j;
      d["gamma"] = v.gamma;
      d["threshold"] = v.threshold;
      d["margin"] = v.margin;
      d["admissible"] = v.admissible;
      out.append(d);
    }
    return out;
  });

  py::class_<SphereField>(m, "SphereField")
      .def_readonly("dim", &SphereField::dim)
      .def_readonly("antipodal", &SphereField::antipodal);

  m.def("circle_field", [](const std::vector<double>& log_values, bool antipodal) {
    return make_circle_field(log_values, antipodal);
  }, py::arg("log_values"), py::arg("antipodal") = false);
  m.def("sphere_field",
        [](int lmax, const std::vector<std::complex<double>>& coeff, bool antipodal) {
          return make_sphere_field(lmax, coeff, antipodal);
        },
        py::arg("lmax"), py::arg("coeff"), py::arg("antipodal") = false);
  m.def("sphere_ratio", &ratio);
  m.def("check_inequality", [](const SphereField& phi, bool symmetric, double tol) {
    const InequalityVerdict v = check_inequality(phi, symmetric, tol);
    py::dict d;
    d["lambda"] = v.lambda;
    d["gamma_integral"] = v.gamma_integral;
    d["gamma2_integral"] = v.gamma2_integral;
    d["margin"] = v.margin;
    d["pass"] = v.pass;
    return d;
  }, py::arg("phi"), py::arg("symmetric") = false, py::arg("tolerance") = 1e-8);

  m.def("parse_config", [](const std::string& text) {
    return initial_state(parse_config(text));
  });
  m.def("load_config", [](const std::string& path) {
    return initial_state(load_config(path));
  });
  m.def("set_parallel_reduction", &set_parallel_reduction);
}
