#include "swlme/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swlme {

double Variable::of(const State& s) const {
    switch (kind) {
        case Kind::height: return s.h();
        case Kind::momentum: return s.q(moment);
        case Kind::velocity: return s.u(moment);
    }
    return 0.0;
}

double l1_error(const CellField& a, const CellField& b, double dx, Variable v) {
    if (a.n_cells() != b.n_cells() || a.n_moments() != b.n_moments())
        throw std::invalid_argument("l1_error: fields live on different grids");
    double acc = 0.0;
    for (int i = 0; i < a.n_cells(); ++i) acc += std::abs(v.of(a.get(i)) - v.of(b.get(i)));
    return acc * dx;
}

CellField restrict_average(const CellField& fine, const Grid& fine_grid, const Grid& coarse_grid) {
    if (fine.n_cells() != fine_grid.n_cells()) throw std::invalid_argument("fine field does not match its grid");
    if (fine_grid.x_left() != coarse_grid.x_left() || fine_grid.x_right() != coarse_grid.x_right())
        throw std::invalid_argument("restriction needs identical domains");
    const int ratio = fine_grid.n_cells() / coarse_grid.n_cells();
    if (ratio * coarse_grid.n_cells() != fine_grid.n_cells())
        throw std::invalid_argument("fine cell count is not a multiple of the coarse one");
    CellField out(coarse_grid.n_cells(), fine.n_moments());
    for (int i = 0; i < coarse_grid.n_cells(); ++i) {
        for (int k = 0; k < fine.stride(); ++k) {
            double acc = 0.0;
            for (int j = i * ratio; j < (i + 1) * ratio; ++j) acc += fine.at(j, k);
            out.at(i, k) = acc / ratio;
        }
    }
    return out;
}

double total_variation_eta(const CellField& cells, const Grid& grid, const Topography& topo) {
    double tv = 0.0;
    double prev = cells.h(0) + topo.z(grid.center(0));
    for (int i = 1; i < cells.n_cells(); ++i) {
        const double eta = cells.h(i) + topo.z(grid.center(i));
        tv += std::abs(eta - prev);
        prev = eta;
    }
    return tv;
}

double total_mass(const CellField& cells, double dx) {
    double m = 0.0;
    for (int i = 0; i < cells.n_cells(); ++i) m += cells.h(i);
    return m * dx;
}

// ---------------------------------------------------------------------------

SchemeConfig RunConfig::scheme() const {
    SchemeConfig s;
    s.order = order;
    s.mode = mode;
    s.cfl = cfl;
    s.g = g;
    s.n_moments = n_moments;
    s.pairing = limiter_pairing;
    s.wave_speeds = wave_speed_mode;
    s.dt_max = dt_max;
    return s;
}

ProblemSetup RunConfig::setup() const {
    ProblemSetup s = problem_setup(parse_test_case(test));
    s.x_left = domain_left;
    s.x_right = domain_right;
    s.n_moments = n_moments;
    s.n_cells = n_cells;
    s.t_end = t_end;
    s.perturbation_amplitude = perturbation_amplitude;
    return s;
}

Grid RunConfig::grid() const { return Grid(domain_left, domain_right, n_cells); }

RunConfig default_config(const std::string& test) {
    const ProblemSetup s = problem_setup(parse_test_case(test));
    RunConfig c;
    c.test = test;
    c.n_cells = s.n_cells;
    c.n_moments = s.n_moments;
    c.t_end = s.t_end;
    c.domain_left = s.x_left;
    c.domain_right = s.x_right;
    c.perturbation_amplitude = s.perturbation_amplitude;
    switch (s.test) {
        case TestCase::lake_at_rest: c.cfl_implicit = 10.0; break;
        case TestCase::subcritical: c.cfl_implicit = 1.26; break;
        case TestCase::subcritical_low_froude: c.cfl_implicit = 10.0; break;
        case TestCase::moments: c.cfl_implicit = 9.15; break;
        case TestCase::convergence:
            c.cfl_implicit = 2.0;
            c.order = 2;
            break;
        case TestCase::parabolic_perturbation:
            c.cfl_implicit = 5.0;
            c.profile_x = {2.25};
            break;
        case TestCase::dam_break:
            c.cfl_implicit = 2.0;
            c.profile_x = {0.0, 0.15};
            c.snapshot_times = {0.01, 0.1};
            break;
    }
    return c;
}

std::string to_string(PressureMode m) { return m == PressureMode::explicit_euler ? "explicit" : "implicit"; }
std::string to_string(LimiterPairing p) { return p == LimiterPairing::as_printed ? "as_printed" : "own_side"; }
std::string to_string(WaveSpeedMode m) { return m == WaveSpeedMode::full ? "full" : "transport"; }

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string trim(std::string s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': expected a number, got '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    int out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw std::invalid_argument("config key '" + key + "': expected an integer, got '" + v + "'");
    return out;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += fmt(xs[i]);
    }
    return out;
}

void set_key(RunConfig& c, const std::string& key, const std::string& v) {
    if (key == "n_cells") c.n_cells = parse_int(key, v);
    else if (key == "n_moments") c.n_moments = parse_int(key, v);
    else if (key == "order") c.order = parse_int(key, v);
    else if (key == "mode") {
        if (v == "explicit") c.mode = PressureMode::explicit_euler;
        else if (v == "implicit") c.mode = PressureMode::implicit_euler;
        else throw std::invalid_argument("config key 'mode': expected explicit|implicit, got '" + v + "'");
    } else if (key == "cfl") c.cfl = parse_double(key, v);
    else if (key == "t_end") c.t_end = parse_double(key, v);
    else if (key == "domain_left") c.domain_left = parse_double(key, v);
    else if (key == "domain_right") c.domain_right = parse_double(key, v);
    else if (key == "g") c.g = parse_double(key, v);
    else if (key == "output_path") c.output_path = v;
    else if (key == "snapshot_times") {
        c.snapshot_times.clear();
        for (const auto& s : split_list(v)) c.snapshot_times.push_back(parse_double(key, s));
    } else if (key == "limiter_pairing") {
        if (v == "as_printed") c.limiter_pairing = LimiterPairing::as_printed;
        else if (v == "own_side") c.limiter_pairing = LimiterPairing::own_side;
        else throw std::invalid_argument("config key 'limiter_pairing': expected as_printed|own_side");
    } else if (key == "wave_speed_mode") {
        if (v == "full") c.wave_speed_mode = WaveSpeedMode::full;
        else if (v == "transport") c.wave_speed_mode = WaveSpeedMode::transport;
        else throw std::invalid_argument("config key 'wave_speed_mode': expected full|transport");
    } else if (key == "dt_max") c.dt_max = parse_double(key, v);
    else if (key == "perturbation_amplitude") c.perturbation_amplitude = parse_double(key, v);
    else if (key == "cfl_explicit") c.cfl_explicit = parse_double(key, v);
    else if (key == "cfl_implicit") c.cfl_implicit = parse_double(key, v);
    else if (key == "reference_cells") c.reference_cells = parse_int(key, v);
    else if (key == "convergence_cells") {
        c.convergence_cells.clear();
        for (const auto& s : split_list(v)) c.convergence_cells.push_back(parse_int(key, s));
    } else if (key == "profile_x") {
        c.profile_x.clear();
        for (const auto& s : split_list(v)) c.profile_x.push_back(parse_double(key, s));
    } else throw std::invalid_argument("unknown config key '" + key + "'");
}

}  // namespace

std::vector<std::string> config_keys() {
    return {"test",         "n_cells",        "n_moments",       "order",           "mode",
            "cfl",          "t_end",          "domain_left",     "domain_right",    "g",
            "output_path",  "snapshot_times", "limiter_pairing", "wave_speed_mode", "dt_max",
            "perturbation_amplitude", "cfl_explicit", "cfl_implicit", "reference_cells", "convergence_cells",
            "profile_x"};
}

RunConfig apply_config(RunConfig base, const std::vector<std::pair<std::string, std::string>>& kv) {
    for (const auto& [k, v] : kv) {
        if (k == "test") {
            const std::string out = base.output_path;
            base = default_config(v);
            base.output_path = out;
        }
    }
    for (const auto& [k, v] : kv)
        if (k != "test") set_key(base, k, v);
    return base;
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return apply_config(std::move(base), kv);
}

RunConfig read_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config_text(ss.str(), std::move(base));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

std::string format_config(const RunConfig& c) {
    std::ostringstream out;
    out << "test=" << c.test << '\n'
        << "n_cells=" << c.n_cells << '\n'
        << "n_moments=" << c.n_moments << '\n'
        << "order=" << c.order << '\n'
        << "mode=" << to_string(c.mode) << '\n'
        << "cfl=" << format_double(c.cfl) << '\n'
        << "t_end=" << format_double(c.t_end) << '\n'
        << "domain_left=" << format_double(c.domain_left) << '\n'
        << "domain_right=" << format_double(c.domain_right) << '\n'
        << "g=" << format_double(c.g) << '\n'
        << "output_path=" << c.output_path << '\n'
        << "snapshot_times=" << join(c.snapshot_times, format_double) << '\n'
        << "limiter_pairing=" << to_string(c.limiter_pairing) << '\n'
        << "wave_speed_mode=" << to_string(c.wave_speed_mode) << '\n'
        << "dt_max=" << format_double(c.dt_max) << '\n'
        << "perturbation_amplitude=" << format_double(c.perturbation_amplitude) << '\n'
        << "cfl_explicit=" << format_double(c.cfl_explicit) << '\n'
        << "cfl_implicit=" << format_double(c.cfl_implicit) << '\n'
        << "reference_cells=" << c.reference_cells << '\n'
        << "convergence_cells=" << join(c.convergence_cells, [](int v) { return std::to_string(v); }) << '\n'
        << "profile_x=" << join(c.profile_x, format_double) << '\n';
    return out.str();
}

void write_config(const RunConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file " + path.string());
    out << format_config(cfg);
}

// ---------------------------------------------------------------------------

void write_snapshot(const CellField& cells, const Grid& grid, const Topography& topo,
                    const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write snapshot " + path.string());
    const int n = cells.n_moments();
    out << "x,z,h,eta";
    for (int j = 0; j <= n; ++j) out << ",u" << j;
    for (int j = 0; j <= n; ++j) out << ",q" << j;
    out << ",pi\n";
    for (int i = 0; i < cells.n_cells(); ++i) {
        const State s = cells.get(i);
        const double x = grid.center(i);
        const double z = topo.z(x);
        out << format_double(x) << ',' << format_double(z) << ',' << format_double(s.h()) << ','
            << format_double(s.h() + z);
        for (int j = 0; j <= n; ++j) out << ',' << format_double(s.u(j));
        for (int j = 0; j <= n; ++j) out << ',' << format_double(s.q(j));
        out << ',' << format_double(s.pi()) << '\n';
    }
    if (!out) throw std::runtime_error("error while writing snapshot " + path.string());
}

void write_velocity_profiles(const CellField& cells, const Grid& grid, const std::vector<double>& xs,
                             const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write velocity profile " + path.string());
    std::vector<State> at;
    out << "zeta";
    for (double x : xs) {
        const int i = std::clamp(static_cast<int>(std::floor((x - grid.x_left()) / grid.dx())), 0,
                                 grid.n_cells() - 1);
        at.push_back(cells.get(i));
        out << ",u(x=" << format_double(x) << ")";
    }
    out << '\n';
    for (int k = 0; k <= 100; ++k) {
        const double zeta = k / 100.0;
        out << format_double(zeta);
        for (const auto& s : at) out << ',' << format_double(velocity_profile(s, zeta));
        out << '\n';
    }
}

}  // namespace swlme
