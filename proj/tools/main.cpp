// gasfilt command line: thermodynamic state tables, coexistence and spinodal
// curves, isentropes, Q profiles and the filtration Dirichlet pipeline, all
// emitted as CSV (17 significant digits) or JSON.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gasfilt/io.hpp"
#include "gasfilt/models.hpp"
#include "gasfilt/phase_map.hpp"
#include "gasfilt/thermo.hpp"

using nlohmann::json;
using namespace gasfilt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct OutputTarget {
    std::string path; // empty = stdout
    std::string format = "csv";

    std::ostream& open(std::ofstream& file) const {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw std::ios_base::failure("cannot open '" + path + "'");
        return file;
    }
};

void check_known_keys(const json& obj, const std::vector<std::string>& allowed,
                      const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParamError("scenario: unknown key '" + key + "' in " + where);
    }
}

struct Scenario {
    GasModel model;
    double sigma0 = 0.0;
    MediumSpec medium;
    std::pair<double, double> v_range{0.0, 0.0};
    int samples = 0;
    std::vector<SourceSpec> sources;
    std::optional<BoxDomain> box;
    std::optional<double> v0_const;
    std::string v0_table_file;
    std::optional<std::pair<double, double>> binodal_T;
    int binodal_steps = 0;
    double r_min = 0, r_max = 0;
    int r_samples = 0;
    std::array<int, 3> map_sampling{0, 0, 0};
};

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open scenario '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParamError(std::string("scenario: bad JSON: ") + e.what());
    }
    check_known_keys(j,
                     {"model", "n", "sigma0", "mu", "permeability", "v_range",
                      "samples", "sources", "box", "v0", "binodal", "radial",
                      "map_sampling"},
                     "top level");

    Scenario s;
    const double n = j.value("n", 3.0);
    s.model = model_from_string(j.value("model", "vdw"), n);
    if (!j.contains("sigma0")) throw ParamError("scenario: missing 'sigma0'");
    s.sigma0 = j.at("sigma0").get<double>();
    s.medium.mu = j.value("mu", 1.0);

    if (j.contains("permeability")) {
        const json& p = j.at("permeability");
        check_known_keys(p, {"isotropic", "eigs", "frame"}, "permeability");
        if (p.contains("isotropic")) {
            s.medium.permeability = Isotropic{p.at("isotropic").get<double>()};
        } else {
            HomogeneousAnisotropic an;
            const auto eigs = p.at("eigs").get<std::vector<double>>();
            if (eigs.size() != 3) throw ParamError("scenario: 'eigs' needs 3 values");
            std::copy(eigs.begin(), eigs.end(), an.eigs.begin());
            if (p.contains("frame")) {
                const auto rows = p.at("frame").get<std::vector<std::vector<double>>>();
                if (rows.size() != 3) throw ParamError("scenario: 'frame' needs 3 rows");
                for (int i = 0; i < 3; ++i) {
                    if (rows[i].size() != 3)
                        throw ParamError("scenario: 'frame' rows need 3 entries");
                    std::copy(rows[i].begin(), rows[i].end(), an.frame[i].begin());
                }
            }
            s.medium.permeability = an;
        }
    }
    s.medium.validate();

    if (!j.contains("v_range")) throw ParamError("scenario: missing 'v_range'");
    const auto vr = j.at("v_range").get<std::vector<double>>();
    if (vr.size() != 2) throw ParamError("scenario: 'v_range' needs [lo, hi]");
    s.v_range = {vr[0], vr[1]};
    s.samples = j.value("samples", 512);

    if (j.contains("sources")) {
        for (const json& src : j.at("sources")) {
            check_known_keys(src, {"pos", "I"}, "sources[]");
            SourceSpec sp;
            const auto pos = src.at("pos").get<std::vector<double>>();
            if (pos.size() != 3) throw ParamError("scenario: source 'pos' needs 3 values");
            std::copy(pos.begin(), pos.end(), sp.position.begin());
            sp.intensity = src.at("I").get<double>();
            s.sources.push_back(sp);
        }
    }
    if (j.contains("box")) {
        const json& b = j.at("box");
        check_known_keys(b, {"lower", "upper", "resolution"}, "box");
        BoxDomain box;
        const auto lo = b.at("lower").get<std::vector<double>>();
        const auto hi = b.at("upper").get<std::vector<double>>();
        const auto res = b.at("resolution").get<std::vector<int>>();
        if (lo.size() != 3 || hi.size() != 3 || res.size() != 3)
            throw ParamError("scenario: box fields need 3 entries each");
        std::copy(lo.begin(), lo.end(), box.lower.begin());
        std::copy(hi.begin(), hi.end(), box.upper.begin());
        std::copy(res.begin(), res.end(), box.resolution.begin());
        s.box = box;
    }
    if (j.contains("v0")) {
        const json& v0 = j.at("v0");
        if (v0.is_number()) {
            s.v0_const = v0.get<double>();
        } else {
            check_known_keys(v0, {"expr", "file"}, "v0");
            if (v0.value("expr", "") != "table")
                throw ParamError("scenario: v0 must be a number or {expr:'table', file:...}");
            s.v0_table_file = v0.at("file").get<std::string>();
        }
    }
    if (j.contains("binodal")) {
        const json& b = j.at("binodal");
        check_known_keys(b, {"T_min", "T_max", "steps"}, "binodal");
        s.binodal_T = {b.at("T_min").get<double>(), b.at("T_max").get<double>()};
        s.binodal_steps = b.value("steps", 32);
    }
    if (j.contains("radial")) {
        const json& r = j.at("radial");
        check_known_keys(r, {"r_min", "r_max", "samples"}, "radial");
        s.r_min = r.at("r_min").get<double>();
        s.r_max = r.at("r_max").get<double>();
        s.r_samples = r.value("samples", 128);
    }
    if (j.contains("map_sampling")) {
        const auto ms = j.at("map_sampling").get<std::vector<int>>();
        if (ms.size() != 3) throw ParamError("scenario: 'map_sampling' needs 3 entries");
        std::copy(ms.begin(), ms.end(), s.map_sampling.begin());
    }
    return s;
}

/// Nearest-point lookup of boundary volumes from a CSV of x1,x2,x3,v rows.
BoundaryFn boundary_from_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open boundary table '" + path + "'");
    std::vector<std::array<double, 4>> rows;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 4> row{};
        std::istringstream ss(line);
        std::string cell;
        for (int c = 0; c < 4; ++c) {
            if (!std::getline(ss, cell, ','))
                throw ParamError("boundary table: need 4 columns per row");
            row[c] = std::stod(cell);
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw ParamError("boundary table: no rows");
    return [rows](const Point& x) {
        double best = std::numeric_limits<double>::infinity();
        double val = rows.front()[3];
        for (const auto& r : rows) {
            const double d2 = (x[0] - r[0]) * (x[0] - r[0]) +
                              (x[1] - r[1]) * (x[1] - r[1]) +
                              (x[2] - r[2]) * (x[2] - r[2]);
            if (d2 < best) {
                best = d2;
                val = r[3];
            }
        }
        return val;
    };
}

BinodalTable make_binodal_table(const GasModel& model, double T_min, double T_max,
                                int steps) {
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i)
        grid.push_back(T_min + (T_max - T_min) * i / (steps - 1));
    return BinodalTable(binodal_curve(model, grid), critical_point(model));
}

std::string label_or_below(const BinodalTable& table, double v, double T) {
    try {
        return to_string(classify(table, v, T).phase);
    } catch (const ExtrapolationError&) {
        return "below_table";
    }
}

// ---- commands ----

int cmd_state(const std::string& model_str, double n, double T, double v,
              const OutputTarget& out) {
    const GasModel model = model_from_string(model_str, n);
    const ThermoState s = evaluate_state(model, T, v);
    auto safe = [&](double (*f)(const GasModel&, double, double)) {
        try {
            return f(model, T, v);
        } catch (const SingularError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    const double cv = heat_capacity_v(model, T, v);
    const double cp = safe(heat_capacity_p);
    const double cs = safe(sound_speed_sq);

    std::ofstream file;
    std::ostream& os = out.open(file);
    if (out.format == "json") {
        json j{{"model", model.name}, {"n", model.n},   {"T", T},
               {"v", v},              {"p", s.p},       {"eps", s.eps},
               {"sigma", s.sigma},    {"gamma", s.gamma}, {"eta", s.eta},
               {"Cv", cv},            {"Cp", cp},       {"Cs", cs},
               {"applicability", to_string(s.applicability)}};
        os << j.dump(2) << "\n";
    } else {
        CsvWriter w(os, {"T", "v", "p", "eps", "sigma", "gamma", "eta", "Cv", "Cp",
                         "Cs", "applicability"});
        w.field(T);
        w.field(v);
        w.field(s.p);
        w.field(s.eps);
        w.field(s.sigma);
        w.field(s.gamma);
        w.field(s.eta);
        w.field(cv);
        w.field(cp);
        w.field(cs);
        w.field(std::string(to_string(s.applicability)));
        w.end_row();
    }
    return kExitOk;
}

int cmd_binodal(const std::string& model_str, double n, double T_min, double T_max,
                int steps, bool with_spinodal, const OutputTarget& out) {
    const GasModel model = model_from_string(model_str, n);
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i)
        grid.push_back(T_min + (T_max - T_min) * i / std::max(1, steps - 1));
    const auto curve = binodal_curve(model, grid);

    std::ofstream file;
    std::ostream& os = out.open(file);
    std::vector<std::string> header{"T", "v1", "v2", "p", "dQ", "dW", "dEps"};
    if (with_spinodal) {
        header.push_back("v_spin_left");
        header.push_back("v_spin_right");
    }
    if (out.format == "json") {
        json rows = json::array();
        for (const auto& cp : curve) {
            json r{{"T", cp.T},   {"v1", cp.v1}, {"v2", cp.v2},    {"p", cp.p},
                   {"dQ", cp.dQ}, {"dW", cp.dW}, {"dEps", cp.dEps}};
            if (with_spinodal) {
                const auto [sl, sr] = spinodal_volumes(model, cp.T);
                r["v_spin_left"] = sl;
                r["v_spin_right"] = sr;
            }
            rows.push_back(r);
        }
        os << rows.dump(2) << "\n";
        return kExitOk;
    }
    CsvWriter w(os, header);
    for (const auto& cp : curve) {
        w.field(cp.T);
        w.field(cp.v1);
        w.field(cp.v2);
        w.field(cp.p);
        w.field(cp.dQ);
        w.field(cp.dW);
        w.field(cp.dEps);
        if (with_spinodal) {
            const auto [sl, sr] = spinodal_volumes(model, cp.T);
            w.field(sl);
            w.field(sr);
        }
        w.end_row();
    }
    return kExitOk;
}

int cmd_spinodal(const std::string& model_str, double n, double v_min, double v_max,
                 int steps, const OutputTarget& out) {
    const GasModel model = model_from_string(model_str, n);
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i)
        grid.push_back(v_min + (v_max - v_min) * i / std::max(1, steps - 1));
    std::ofstream file;
    std::ostream& os = out.open(file);
    CsvWriter w(os, {"v", "T"});
    for (const SpinodalPoint& pt : spinodal_curve(model, grid)) {
        w.field(pt.v);
        w.field(pt.T);
        w.end_row();
    }
    return kExitOk;
}

int cmd_isentrope(const std::string& model_str, double n, double sigma0,
                  double v_min, double v_max, int steps, const OutputTarget& out) {
    const GasModel model = model_from_string(model_str, n);
    const Isentrope iso = make_isentrope(model, sigma0);
    std::ofstream file;
    std::ostream& os = out.open(file);
    CsvWriter w(os, {"v", "T", "p", "Cs"});
    for (int i = 0; i < steps; ++i) {
        const double v = v_min + (v_max - v_min) * i / std::max(1, steps - 1);
        w.field(v);
        w.field(iso.temperature(v));
        w.field(iso.pressure(v));
        w.field(iso.sound_speed_sq(v));
        w.end_row();
    }
    return kExitOk;
}

int cmd_qprofile(const Scenario& s, const OutputTarget& out) {
    const Isentrope iso = make_isentrope(s.model, s.sigma0);
    const QProfile prof = build_q_profile(iso, s.medium, s.v_range, s.samples);
    std::ofstream file;
    std::ostream& os = out.open(file);
    CsvWriter w(os, {"v", "Q", "dQ", "branch"});
    const auto vs = prof.sample_v();
    const auto qs = prof.sample_q();
    const auto dqs = prof.sample_dq();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        w.field(vs[i]);
        w.field(qs[i]);
        w.field(dqs[i]);
        w.field(prof.branch_of(vs[i]));
        w.end_row();
    }
    return kExitOk;
}

int cmd_source(const Scenario& s, const OutputTarget& out) {
    if (s.sources.size() != 1)
        throw ParamError("source command needs exactly one source in the scenario");
    if (!(s.r_min > 0.0) || !(s.r_max > s.r_min) || s.r_samples < 2)
        throw ParamError("source command needs a 'radial' section with r_min > 0");
    if (!s.binodal_T)
        throw ParamError("source command needs a 'binodal' section for labels");
    const Isentrope iso = make_isentrope(s.model, s.sigma0);
    const QProfile prof = build_q_profile(iso, s.medium, s.v_range, s.samples);
    const BinodalTable table = make_binodal_table(
        s.model, s.binodal_T->first, s.binodal_T->second, s.binodal_steps);
    const SourceSpec& src = s.sources.front();

    std::ofstream file;
    std::ostream& os = out.open(file);
    CsvWriter w(os, {"r", "u", "branch", "v", "T", "label"});
    for (int i = 0; i < s.r_samples; ++i) {
        const double r =
            s.r_min + (s.r_max - s.r_min) * i / (s.r_samples - 1);
        const double u = src.intensity / (4.0 * M_PI * r);
        const Point x{src.position[0] + r, src.position[1], src.position[2]};
        const auto fields = point_source_field(prof, src, x);
        if (fields.empty()) { // level outside every branch: keep the u row
            w.field(r);
            w.field(u);
            w.field(-1);
            w.field(std::numeric_limits<double>::quiet_NaN());
            w.field(std::numeric_limits<double>::quiet_NaN());
            w.field(std::string("none"));
            w.end_row();
            continue;
        }
        for (const auto& fs : fields) {
            w.field(r);
            w.field(u);
            w.field(fs.branch_id);
            w.field(fs.v);
            w.field(fs.T);
            w.field(label_or_below(table, fs.v, fs.T));
            w.end_row();
        }
    }
    return kExitOk;
}

int cmd_dirichlet(const Scenario& s, const OutputTarget& out) {
    if (!s.box) throw ParamError("dirichlet command needs a 'box' section");
    if (!s.v0_const && s.v0_table_file.empty())
        throw ParamError("dirichlet command needs 'v0'");
    if (out.path.empty())
        throw ParamError("dirichlet command needs --out for the grid file");
    const Isentrope iso = make_isentrope(s.model, s.sigma0);
    const QProfile prof = build_q_profile(iso, s.medium, s.v_range, s.samples);
    const BoundaryFn v0 = s.v0_const
                              ? BoundaryFn([c = *s.v0_const](const Point&) { return c; })
                              : boundary_from_table(s.v0_table_file);
    const HarmonicField hf = assemble_dirichlet_field(*s.box, prof, s.sources, v0);

    std::ofstream file;
    std::ostream& os = out.open(file);
    CsvWriter w(os, {"x1", "x2", "x3", "u"});
    const BoxDomain& box = hf.box();
    for (int k = 0; k <= box.resolution[2] + 1; ++k)
        for (int j = 0; j <= box.resolution[1] + 1; ++j)
            for (int i = 0; i <= box.resolution[0] + 1; ++i) {
                const Point x{box.coord(0, i), box.coord(1, j), box.coord(2, k)};
                bool is_source = false;
                for (const auto& src : s.sources)
                    if (x == src.position) is_source = true;
                w.field(x[0]);
                w.field(x[1]);
                w.field(x[2]);
                w.field(is_source ? std::numeric_limits<double>::quiet_NaN()
                                  : hf.value(x));
                w.end_row();
            }

    json summary{{"residual", hf.residual()},
                 {"sources", s.sources.size()},
                 {"u0_center", hf.u0().interpolate(
                                   {0.5 * (box.lower[0] + box.upper[0]),
                                    0.5 * (box.lower[1] + box.upper[1]),
                                    0.5 * (box.lower[2] + box.upper[2])})}};
    std::ofstream sf(out.path + ".summary.json");
    if (!sf) throw std::ios_base::failure("cannot open summary file");
    sf << summary.dump(2) << "\n";
    return kExitOk;
}

int cmd_phasemap(const Scenario& s, const OutputTarget& out) {
    if (!s.box) throw ParamError("phasemap command needs a 'box' section");
    if (!s.v0_const && s.v0_table_file.empty())
        throw ParamError("phasemap command needs 'v0'");
    if (!s.binodal_T) throw ParamError("phasemap command needs a 'binodal' section");
    if (out.path.empty())
        throw ParamError("phasemap command needs --out for the grid file");
    const Isentrope iso = make_isentrope(s.model, s.sigma0);
    const QProfile prof = build_q_profile(iso, s.medium, s.v_range, s.samples);
    const BinodalTable table = make_binodal_table(
        s.model, s.binodal_T->first, s.binodal_T->second, s.binodal_steps);
    const BoundaryFn v0 = s.v0_const
                              ? BoundaryFn([c = *s.v0_const](const Point&) { return c; })
                              : boundary_from_table(s.v0_table_file);
    const HarmonicField hf = assemble_dirichlet_field(*s.box, prof, s.sources, v0);

    std::array<int, 3> sampling = s.map_sampling;
    if (sampling[0] < 2)
        sampling = {s.box->resolution[0] + 2, s.box->resolution[1] + 2,
                    s.box->resolution[2] + 2};
    const PhaseMapResult res = map_field(hf, prof, table, sampling);

    std::ofstream file;
    std::ostream& os = out.open(file);
    CsvWriter w(os, {"x1", "x2", "x3", "branch", "v", "T", "label"});
    for (const auto& pt : res.points)
        for (const auto& l : pt.labels) {
            w.field(pt.x[0]);
            w.field(pt.x[1]);
            w.field(pt.x[2]);
            w.field(l.branch_id);
            w.field(l.v);
            w.field(l.T);
            w.field(std::string(to_string(l.phase)));
            w.end_row();
        }

    json summary{{"points", res.points.size()},
                 {"interface_segments", res.interfaces.size()}};
    if (s.sources.size() == 1) {
        // interface radii along the axis directions for radial scenarios
        json radii = json::array();
        const double r_hi =
            0.45 * std::min({s.box->upper[0] - s.box->lower[0],
                             s.box->upper[1] - s.box->lower[1],
                             s.box->upper[2] - s.box->lower[2]});
        for (const Point& dir :
             {Point{1, 0, 0}, Point{-1, 0, 0}, Point{0, 1, 0}, Point{0, -1, 0},
              Point{0, 0, 1}, Point{0, 0, -1}}) {
            // the innermost radii may be out of the profile or the table;
            // widen the inner cutoff until the bisection has valid endpoints
            for (double f : {0.05, 0.1, 0.2, 0.3}) {
                try {
                    radii.push_back(interface_radius(hf, prof, table,
                                                     s.sources.front(), dir,
                                                     f * r_hi, r_hi));
                    break;
                } catch (const Error&) {
                    // out of range or no transition; try a larger inner radius
                }
            }
        }
        summary["interface_radii"] = radii;
    }
    std::ofstream sf(out.path + ".summary.json");
    if (!sf) throw std::ios_base::failure("cannot open summary file");
    sf << summary.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"real-gas state surfaces and adiabatic filtration"};
    app.require_subcommand(1);

    std::string model_str = "vdw";
    double n = 3.0;
    double sigma0 = 0.0;
    OutputTarget out;
    std::string scenario_path;
    bool seed_given = false;
    app.add_flag_callback(
           "--seed", [&] { seed_given = true; },
           "rejected: nothing here is randomized")
        ->group("");

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out.path, "output file (default stdout)");
        cmd->add_option("--format", out.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_str, "ideal | vdw | pr | virial:<file>");
        cmd->add_option("--n", n, "degrees of freedom");
    };

    // state
    double T = 1.0, v = 1.0;
    CLI::App* state = app.add_subcommand("state", "thermodynamic state at (T, v)");
    add_model(state);
    add_common(state);
    state->add_option("--T", T, "temperature")->required();
    state->add_option("--v", v, "specific volume")->required();

    // binodal
    double T_min = 0.85, T_max = 0.99;
    int steps = 16;
    bool with_spinodal = false;
    CLI::App* binodal = app.add_subcommand("binodal", "coexistence curve table");
    add_model(binodal);
    add_common(binodal);
    binodal->add_option("--T-min", T_min, "lowest temperature")->required();
    binodal->add_option("--T-max", T_max, "highest temperature")->required();
    binodal->add_option("--steps", steps, "grid points");
    binodal->add_flag("--with-spinodal", with_spinodal,
                      "append spinodal volumes per row");

    // spinodal
    double v_lo = 0.5, v_hi = 4.0;
    CLI::App* spinodal = app.add_subcommand("spinodal", "spinodal curve table");
    add_model(spinodal);
    add_common(spinodal);
    spinodal->add_option("--v-min", v_lo, "lowest volume")->required();
    spinodal->add_option("--v-max", v_hi, "highest volume")->required();
    spinodal->add_option("--steps", steps, "grid points");

    // isentrope
    CLI::App* isentrope = app.add_subcommand("isentrope", "T, p, Cs along sigma0");
    add_model(isentrope);
    add_common(isentrope);
    isentrope->add_option("--sigma0", sigma0, "entropy level")->required();
    isentrope->add_option("--v-min", v_lo, "lowest volume")->required();
    isentrope->add_option("--v-max", v_hi, "highest volume")->required();
    isentrope->add_option("--steps", steps, "grid points");

    // scenario-driven commands
    CLI::App* qprofile = app.add_subcommand("qprofile", "Q(v) table from a scenario");
    CLI::App* source = app.add_subcommand("source", "radial point-source profile");
    CLI::App* dirichlet = app.add_subcommand("dirichlet", "box Dirichlet solve");
    CLI::App* phasemap = app.add_subcommand("phasemap", "labeled phase map");
    for (CLI::App* cmd : {qprofile, source, dirichlet, phasemap}) {
        add_common(cmd);
        cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    }

    try {
        app.parse(argc, argv);
        if (seed_given) {
            std::cerr << "--seed is rejected: outputs are deterministic\n";
            return kExitInput;
        }
        if (state->parsed()) return cmd_state(model_str, n, T, v, out);
        if (binodal->parsed())
            return cmd_binodal(model_str, n, T_min, T_max, steps, with_spinodal, out);
        if (spinodal->parsed())
            return cmd_spinodal(model_str, n, v_lo, v_hi, steps, out);
        if (isentrope->parsed())
            return cmd_isentrope(model_str, n, sigma0, v_lo, v_hi, steps, out);
        const Scenario s = load_scenario(scenario_path);
        if (qprofile->parsed()) return cmd_qprofile(s, out);
        if (source->parsed()) return cmd_source(s, out);
        if (dirichlet->parsed()) return cmd_dirichlet(s, out);
        if (phasemap->parsed()) return cmd_phasemap(s, out);
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const NoRootError& e) {
        std::cerr << "no root: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
