#include "landau/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "landau/equilibrium.hpp"
#include "landau/errors.hpp"
#include "landau/species.hpp"

namespace landau {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw ParameterError(pointer + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& pointer) {
  if (!j.contains(key)) fail(pointer + "/" + key, "missing");
  return j.at(key);
}

double need_number(const json& j, const char* key, const std::string& pointer) {
  const json& v = need(j, key, pointer);
  if (!v.is_number()) fail(pointer + "/" + key, "expected a number");
  return v.get<double>();
}

std::vector<std::vector<double>> need_matrix(const json& j, const char* key, int S,
                                             const std::string& pointer) {
  const json& v = need(j, key, pointer);
  const std::string p = pointer + "/" + key;
  if (!v.is_array() || static_cast<int>(v.size()) != S)
    fail(p, "expected " + std::to_string(S) + " rows");
  std::vector<std::vector<double>> out;
  for (int r = 0; r < S; ++r) {
    const json& row = v.at(static_cast<size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != S)
      fail(p + "/" + std::to_string(r), "expected " + std::to_string(S) + " entries");
    std::vector<double> rr;
    for (int c = 0; c < S; ++c) {
      const json& x = row.at(static_cast<size_t>(c));
      if (!x.is_number())
        fail(p + "/" + std::to_string(r) + "/" + std::to_string(c), "expected a number");
      rr.push_back(x.get<double>());
    }
    out.push_back(std::move(rr));
  }
  return out;
}

Vec parse_vec(const json& v, int dim, const std::string& pointer) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    fail(pointer, "expected " + std::to_string(dim) + " components");
  Vec out = vec0();
  for (int c = 0; c < dim; ++c) {
    const json& x = v.at(static_cast<size_t>(c));
    if (!x.is_number()) fail(pointer + "/" + std::to_string(c), "expected a number");
    out[c] = x.get<double>();
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig c;
  const json& dim = need(j, "dim", "");
  if (!dim.is_number_integer()) fail("/dim", "expected an integer");
  c.dim = dim.get<int>();
  if (c.dim != 2 && c.dim != 3) fail("/dim", "must be 2 or 3");

  const json& grid = need(j, "grid", "");
  c.extent = need_number(grid, "extent", "/grid");
  if (!(c.extent > 0.0)) fail("/grid/extent", "must be positive");
  const json& ppa = need(grid, "points_per_axis", "/grid");
  if (!ppa.is_number_integer()) fail("/grid/points_per_axis", "expected an integer");
  c.points_per_axis = ppa.get<int>();
  if (c.points_per_axis < 8 || c.points_per_axis % 2 != 0)
    fail("/grid/points_per_axis", "must be even and >= 8");

  const json& species = need(j, "species", "");
  if (!species.is_array() || species.empty()) fail("/species", "expected a nonempty array");
  const int S = static_cast<int>(species.size());
  for (int i = 0; i < S; ++i) {
    const std::string p = "/species/" + std::to_string(i);
    const json& sp = species.at(static_cast<size_t>(i));
    const double m = need_number(sp, "mass", p);
    if (!(m > 0.0)) fail(p + "/mass", "must be positive");
    c.masses.push_back(m);
    const json& init = need(sp, "initial", p);
    if (!init.is_array() || init.empty())
      fail(p + "/initial", "expected a nonempty array of bumps");
    std::vector<GaussianBump> bumps;
    for (size_t b = 0; b < init.size(); ++b) {
      const std::string pb = p + "/initial/" + std::to_string(b);
      const json& jb = init.at(b);
      GaussianBump g;
      g.n = need_number(jb, "n", pb);
      if (!(g.n > 0.0)) fail(pb + "/n", "must be positive");
      g.theta = need_number(jb, "theta", pb);
      if (!(g.theta > 0.0)) fail(pb + "/theta", "must be positive");
      g.u = parse_vec(need(jb, "u", pb), c.dim, pb + "/u");
      bumps.push_back(g);
    }
    c.initial.push_back(std::move(bumps));
  }

  c.couplings = need_matrix(j, "couplings", S, "");
  c.exponents = need_matrix(j, "exponents", S, "");
  const double lower = -static_cast<double>(c.dim) - 2.0;
  for (int r = 0; r < S; ++r)
    for (int col = 0; col < S; ++col) {
      const std::string p =
          "/" + std::string("exponents") + "/" + std::to_string(r) + "/" + std::to_string(col);
      const double g = c.exponents[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (!(g > lower) || g > 1.0) {
        std::ostringstream os;
        os << "exponent outside (" << lower << ", 1]";
        fail(p, os.str());
      }
      if (c.couplings[static_cast<size_t>(r)][static_cast<size_t>(col)] < 0.0)
        fail("/couplings/" + std::to_string(r) + "/" + std::to_string(col), "must be >= 0");
    }

  const json& run = need(j, "run", "");
  const json& flow = need(run, "flow", "/run");
  if (flow == "landau") c.run.flow = Flow::landau;
  else if (flow == "fokker_planck") c.run.flow = Flow::fokker_planck;
  else fail("/run/flow", "must be \"landau\" or \"fokker_planck\"");
  const json& scheme = need(run, "scheme", "/run");
  if (scheme == "euler") c.run.scheme = Scheme::euler;
  else if (scheme == "rk4") c.run.scheme = Scheme::rk4;
  else fail("/run/scheme", "must be \"euler\" or \"rk4\"");
  c.run.dt = need_number(run, "dt", "/run");
  if (!(c.run.dt > 0.0)) fail("/run/dt", "must be positive");
  c.run.t_end = need_number(run, "t_end", "/run");
  if (c.run.t_end < 0.0) fail("/run/t_end", "must be nonnegative");
  if (run.contains("diagnostics_every")) {
    if (!run.at("diagnostics_every").is_number_integer())
      fail("/run/diagnostics_every", "expected an integer");
    c.run.diagnostics_every = run.at("diagnostics_every").get<int>();
    if (c.run.diagnostics_every < 1) fail("/run/diagnostics_every", "must be >= 1");
  }
  if (run.contains("floor")) {
    c.run.floor = run.at("floor").get<double>();
    if (!(c.run.floor > 0.0)) fail("/run/floor", "must be positive");
  }
  if (run.contains("deterministic_reduction")) {
    if (!run.at("deterministic_reduction").is_boolean())
      fail("/run/deterministic_reduction", "expected a boolean");
    c.run.deterministic_reduction = run.at("deterministic_reduction").get<bool>();
  }
  if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("config: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

MixtureState initial_state(const ExperimentConfig& config) {
  const SpeciesSet species =
      make_species_set(config.masses, config.couplings, config.exponents, config.dim);
  const VelocityGrid grid = make_grid(config.dim, config.extent, config.points_per_axis);
  std::vector<GridField> fields;
  for (size_t i = 0; i < config.initial.size(); ++i) {
    GridField f = make_field(grid);
    for (const GaussianBump& b : config.initial[i]) {
      const GridField bump =
          maxwellian(grid, config.masses[i], MacroState{b.n, b.u, b.theta});
      for (size_t m = 0; m < f.values.size(); ++m) f.values[m] += bump.values[m];
    }
    fields.push_back(std::move(f));
  }
  MixtureState s = make_state(species, grid, std::move(fields), config.run.floor);
  return s;
}

namespace {

void put(std::FILE* fp, double x, bool lead_comma = true) {
  std::fprintf(fp, lead_comma ? ",%.17g" : "%.17g", x);
}

}  // namespace

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records, int species_count,
                           int dim) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw ParameterError("csv: cannot write " + path);
  std::fprintf(fp, "t");
  for (int i = 1; i <= species_count; ++i) std::fprintf(fp, ",n_%d", i);
  for (int a = 1; a <= dim; ++a) std::fprintf(fp, ",P_%d", a);
  std::fprintf(fp, ",E,rho");
  for (int a = 1; a <= dim; ++a) std::fprintf(fp, ",u_%d", a);
  std::fprintf(fp, ",theta,H,I,dH_formula,dI_formula,dI_xi,dI_decomp_total");
  const char* names[4] = {"D_par", "D_rad", "D_sph", "R_sph"};
  for (const char* nm : names)
    for (int i = 1; i <= species_count; ++i)
      for (int j = i; j <= species_count; ++j) std::fprintf(fp, ",%s_%d%d", nm, i, j);
  std::fprintf(fp, ",clamped_mass\n");

  for (const DiagnosticsRecord& r : records) {
    put(fp, r.time, false);
    for (double n : r.mom.n) put(fp, n);
    for (int a = 0; a < dim; ++a) put(fp, r.mom.P[a]);
    put(fp, r.mom.E);
    put(fp, r.mom.rho);
    for (int a = 0; a < dim; ++a) put(fp, r.mom.u[a]);
    put(fp, r.mom.theta);
    put(fp, r.H);
    put(fp, r.I);
    put(fp, -r.entropy_dissipation);
    put(fp, r.fisher_dissipation);
    put(fp, r.fisher_dissipation_xi);
    put(fp, r.breakdown.total);
    for (int comp = 0; comp < 4; ++comp)
      for (const PairBreakdown& pb : r.breakdown.pairs) {
        const double vals[4] = {pb.d_parallel, pb.d_radial, pb.d_spherical, pb.r_spherical};
        put(fp, vals[comp]);
      }
    put(fp, r.clamped_mass);
    std::fprintf(fp, "\n");
  }
  std::fclose(fp);
}

void write_snapshot(const std::string& prefix, const MixtureState& state) {
  {
    std::ofstream bin(prefix + ".bin", std::ios::binary);
    if (!bin) throw ParameterError("snapshot: cannot write " + prefix + ".bin");
    for (const GridField& f : state.fields)
      bin.write(reinterpret_cast<const char*>(f.values.data()),
                static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  }
  json side;
  side["dim"] = state.grid.dim;
  side["extent"] = state.grid.extent;
  side["points_per_axis"] = state.grid.points_per_axis;
  side["time"] = state.time;
  side["floor"] = state.floor;
  side["masses"] = state.species.masses;
  json cp = json::array(), ex = json::array();
  for (int i = 0; i < state.species.count; ++i) {
    json cr = json::array(), er = json::array();
    for (int j = 0; j < state.species.count; ++j) {
      cr.push_back(state.species.coupling(i, j));
      er.push_back(state.species.exponent(i, j));
    }
    cp.push_back(cr);
    ex.push_back(er);
  }
  side["couplings"] = cp;
  side["exponents"] = ex;
  side["layout"] = "row-major, axis 0 fastest, species back to back, float64";
  std::ofstream js(prefix + ".json");
  if (!js) throw ParameterError("snapshot: cannot write " + prefix + ".json");
  js << side.dump(2) << "\n";
}

MixtureState read_snapshot(const std::string& prefix) {
  std::ifstream js(prefix + ".json");
  if (!js) throw ParameterError("snapshot: cannot read " + prefix + ".json");
  json side;
  try {
    js >> side;
  } catch (const json::parse_error& e) {
    throw ParameterError("snapshot: invalid sidecar: " + std::string(e.what()));
  }
  const int dim = side.at("dim").get<int>();
  const VelocityGrid grid =
      make_grid(dim, side.at("extent").get<double>(), side.at("points_per_axis").get<int>());
  const std::vector<double> masses = side.at("masses").get<std::vector<double>>();
  const auto couplings = side.at("couplings").get<std::vector<std::vector<double>>>();
  const auto exponents = side.at("exponents").get<std::vector<std::vector<double>>>();
  const SpeciesSet species = make_species_set(masses, couplings, exponents, dim);

  std::ifstream bin(prefix + ".bin", std::ios::binary);
  if (!bin) throw ParameterError("snapshot: cannot read " + prefix + ".bin");
  std::vector<GridField> fields;
  for (int i = 0; i < species.count; ++i) {
    GridField f = make_field(grid);
    bin.read(reinterpret_cast<char*>(f.values.data()),
             static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!bin) throw ParameterError("snapshot: " + prefix + ".bin truncated");
    fields.push_back(std::move(f));
  }
  MixtureState s = make_state(species, grid, std::move(fields),
                              side.value("floor", 1e-30));
  s.time = side.value("time", 0.0);
  return s;
}

}  // namespace landau
