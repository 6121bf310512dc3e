#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "swlme/io.hpp"
#include "swlme/problems.hpp"

using namespace swlme;

namespace {

constexpr double kG = 9.812;

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "swlme_grid_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

int count_columns(const std::string& line) { return static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1; }

}  // namespace

TEST_CASE("grid geometry") {
    const Grid g(-1.0, 1.0, 400);
    CHECK(g.dx() == 0.005);
    CHECK(g.center(0) == doctest::Approx(-0.9975));
    CHECK(g.interface(0) == -1.0);
    CHECK(g.interface(400) == doctest::Approx(1.0));
    CHECK(g.centers().size() == 400);
    CHECK(g.interfaces().size() == 401);
    CHECK(Grid::n_ghost == 2);
    CHECK_THROWS_AS(Grid(1.0, 0.0, 10), DomainError);
    CHECK_THROWS_AS(Grid(0.0, 1.0, 0), DomainError);
}

TEST_CASE("topography catalog") {
    const auto par = Topography::parabolic_bump();
    CHECK(par.eval(0.0).z == 2.0);
    CHECK(par.eval(0.0).dzdx == 0.0);
    CHECK(par.eval(0.8).z == 1.75);
    CHECK(par.eval(0.8).dzdx == 0.0);
    CHECK(par.eval(0.3).dzdx == doctest::Approx(-0.6));
    const auto cb = Topography::cosine_bump();
    CHECK(cb.eval(1.5).z == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(cb.eval(1.5).dzdx) < 1e-12);
    CHECK(cb.z(0.5) == 0.0);
    SUBCASE("continuity at the seams") {
        const double e = 1e-15;
        for (double x : {-0.5, 0.5}) CHECK(std::abs(par.z(x - e) - par.z(x + e)) < 1e-14);
        for (double x : {1.3, 1.7}) CHECK(std::abs(cb.z(x - e) - cb.z(x + e)) < 1e-14);
    }
    SUBCASE("tabulated") {
        const auto t = Topography::tabulated({0.0, 1.0, 2.0}, {0.0, 1.0, 0.5});
        CHECK(t.z(0.5) == 0.5);
        CHECK(t.eval(1.5).dzdx == -0.5);
        CHECK(t.z(-1.0) == 0.0);
        CHECK(t.eval(-1.0).dzdx == 0.0);
        CHECK(t.z(3.0) == 0.5);
        CHECK_THROWS_AS(Topography::tabulated({0.0, 0.0}, {1.0, 1.0}), DomainError);
    }
    CHECK(Topography::flat(0.3).z(12.0) == 0.3);
}

TEST_CASE("initial conditions") {
    const ModelParams p{kG, 8, 1.0};
    SUBCASE("lake at rest") {
        const Grid g(-1.0, 1.0, 4);  // centers at -0.75, -0.25, 0.25, 0.75
        const auto ic = build_ic(problem_setup(TestCase::lake_at_rest), g, p);
        CHECK(ic.get(1).h() == doctest::Approx(3.0 - (2.0 - 0.0625)));
        CHECK(ic.get(0).h() == doctest::Approx(1.25));
        for (int i = 0; i < 4; ++i) {
            CHECK(ic.get(i).q(0) == 0.0);
            CHECK(ic.get(i).pi() == doctest::Approx(0.5 * kG * ic.h(i) * ic.h(i)));
        }
        const Grid odd(-1.0, 1.0, 5);
        CHECK(build_ic(problem_setup(TestCase::lake_at_rest), odd, p).h(2) == doctest::Approx(1.0));
    }
    SUBCASE("dam break") {
        const Grid g(-0.4, 0.4, 8);  // center 2 at -0.15
        const auto ic = build_ic(problem_setup(TestCase::dam_break), g, p);
        const State s = ic.get(2);
        CHECK(s.h() == 2.0);
        CHECK(s.u(0) == 0.25);
        CHECK(s.u(1) == -0.005);
        CHECK(s.u(8) == 0.005);
        for (int j = 2; j < 8; ++j) CHECK(s.u(j) == 0.0);
        CHECK(ic.get(6).h() == 1.0);
    }
    SUBCASE("moving steady state away from the bump") {
        const Grid g(0.0, 3.0, 6);
        const auto ic = build_ic(problem_setup(TestCase::subcritical), g, p);
        CHECK(ic.get(0).h() == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(ic.get(0).u(0) == doctest::Approx(1.75).epsilon(1e-13));
    }
    SUBCASE("steady residual vanishes at every center") {
        const Grid g(0.0, 3.0, 200);
        const auto topo = Topography::cosine_bump();
        for (auto t : {TestCase::subcritical, TestCase::subcritical_low_froude, TestCase::moments}) {
            const auto ic = build_ic(problem_setup(t), g, p);
            for (int i = 0; i < 200; ++i) {
                const State s = ic.get(i);
                const double z = topo.z(g.center(i));
                double e = 0.5 * s.u(0) * s.u(0) + kG * (s.h() + z) - 21.15525;
                for (int j = 1; j <= 8; ++j) e += 1.5 * s.u(j) * s.u(j) / (2.0 * j + 1.0);
                CHECK(std::abs(e) <= 1e-13 * 21.15525);
            }
        }
    }
    SUBCASE("perturbation") {
        CHECK(perturbation(1e-4, 2.0) == 1e-4);
        CHECK(perturbation(1e-4, 2.1) == doctest::Approx(1e-4 * std::exp(-2.0)));
        const Grid g(0.0, 3.0, 300);
        const auto base = build_ic(problem_setup(TestCase::moments), g, p);
        const auto pert = build_ic(problem_setup(TestCase::convergence), g, p);
        const int i = 199;  // center 1.995
        CHECK(pert.h(i) - base.h(i) == doctest::Approx(perturbation(1e-4, g.center(i))).epsilon(1e-9));
    }
    SUBCASE("parabolic perturbation test uses two moments") {
        const auto s = problem_setup(TestCase::parabolic_perturbation);
        CHECK(s.n_moments == 2);
        const Grid g(0.0, 3.0, 30);
        const auto ic = build_ic(s, g, {kG, 2, 1.0});
        CHECK(ic.get(3).u(1) / ic.get(3).h() == doctest::Approx(-0.005));
        CHECK(ic.get(3).u(2) / ic.get(3).h() == doctest::Approx(-0.001));
    }
}

TEST_CASE("L1 error") {
    const int n = 400;
    CellField a(n, 1), b(n, 1);
    for (int i = 0; i < n; ++i) {
        State s(1);
        s.set_h(1.0 + 0.001 * i);
        a.set(i, s);
        s.set_h(s.h() + 1e-3);
        b.set(i, s);
    }
    const double dx = 2.0 / n;
    CHECK(l1_error(a, a, dx, Variable::h()) == 0.0);
    CHECK(l1_error(a, b, dx, Variable::h()) == doctest::Approx(2e-3).epsilon(1e-10));
    CellField c = a;
    c.at(7, 0) += 1e-3;
    CHECK(l1_error(a, c, 0.005, Variable::h()) == doctest::Approx(1e-3 * 0.005).epsilon(1e-10));
    CHECK_THROWS_AS(l1_error(a, CellField(n - 1, 1), dx, Variable::h()), std::invalid_argument);

    std::mt19937 rng(43);
    std::uniform_real_distribution<double> d(0.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        CellField x(30, 0), y(30, 0), z(30, 0);
        for (int i = 0; i < 30; ++i) {
            x.at(i, 0) = d(rng);
            y.at(i, 0) = d(rng);
            z.at(i, 0) = d(rng);
        }
        const double xy = l1_error(x, y, 0.1, Variable::h());
        CHECK(xy > 0.0);
        CHECK(xy == l1_error(y, x, 0.1, Variable::h()));
        CHECK(xy <= l1_error(x, z, 0.1, Variable::h()) + l1_error(z, y, 0.1, Variable::h()) + 1e-15);
    }
}

TEST_CASE("conservative restriction") {
    const Grid fine(0.0, 1.0, 8), coarse(0.0, 1.0, 2);
    CellField f(8, 0);
    for (int i = 0; i < 8; ++i) {
        f.at(i, 0) = i + 1.0;
        f.at(i, 1) = 2.0 * i;
    }
    const auto c = restrict_average(f, fine, coarse);
    CHECK(c.at(0, 0) == 2.5);
    CHECK(c.at(1, 0) == 6.5);
    CHECK(c.at(1, 1) == 2.0 * 5.5);
    CHECK(total_mass(c, coarse.dx()) == doctest::Approx(total_mass(f, fine.dx())));
    CHECK_THROWS(restrict_average(f, fine, Grid(0.0, 1.0, 3)));
    CHECK_THROWS(restrict_average(f, fine, Grid(0.0, 2.0, 2)));
}

TEST_CASE("total variation of the free surface") {
    const Grid g(0.0, 1.0, 4);
    CellField c(4, 0);
    const double h[] = {1.0, 2.0, 1.5, 1.5};
    for (int i = 0; i < 4; ++i) c.at(i, 0) = h[i];
    CHECK(total_variation_eta(c, g, Topography::flat()) == 1.5);
    CHECK(total_variation_eta(c, g, Topography::flat(2.0)) == 1.5);
}

TEST_CASE("configuration files") {
    SUBCASE("defaults round trip") {
        for (const std::string id : {"1", "2", "2_lowfroude", "3", "4", "5", "6"}) {
            const RunConfig c = default_config(id);
            const auto path = scratch("cfg_" + id + ".txt");
            write_config(c, path);
            CHECK(read_config(path) == c);
        }
    }
    SUBCASE("modified values round trip") {
        RunConfig c = default_config("6");
        c.cfl = 0.1 + 0.2;
        c.mode = PressureMode::implicit_euler;
        c.limiter_pairing = LimiterPairing::own_side;
        c.wave_speed_mode = WaveSpeedMode::full;
        c.snapshot_times = {1.0 / 3.0, 0.07};
        c.profile_x = {};
        CHECK(parse_config_text(format_config(c)) == c);
    }
    SUBCASE("test key loads that test's defaults before other keys") {
        const auto c = parse_config_text("cfl = 2 # comment\n\ntest=6\n");
        CHECK(c.test == "6");
        CHECK(c.domain_left == -0.4);
        CHECK(c.cfl == 2.0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_config_text("cfl_typo=1\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config_text("cfl=abc\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config_text("n_cells=1.5\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config_text("mode=semi\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config_text("just words\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config_text("test=9\n"), std::invalid_argument);
        try {
            read_config("/nonexistent/dir/cfg.txt");
            FAIL("expected an error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("/nonexistent/dir/cfg.txt") != std::string::npos);
        }
    }
    SUBCASE("every spec key is accepted") {
        for (const auto& k : config_keys()) {
            if (k == "test") continue;
            const RunConfig c = default_config("1");
            std::ostringstream line;
            const std::string text = format_config(c);
            const auto pos = text.find("\n" + k + "=");
            CHECK((pos != std::string::npos || text.rfind(k + "=", 0) == 0));
        }
    }
}

TEST_CASE("CSV output") {
    const Grid g(-0.4, 0.4, 10);
    const auto ic = build_ic(problem_setup(TestCase::dam_break), g, {kG, 8, 1.0});
    const auto snap = scratch("snap.csv");
    write_snapshot(ic, g, Topography::flat(), snap);
    const auto lines = read_lines(snap);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0].rfind("x,z,h,eta,u0,", 0) == 0);
    CHECK(lines[0].substr(lines[0].size() - 3) == ",pi");
    CHECK(count_columns(lines[0]) == 4 + 2 * 9 + 1);
    for (std::size_t i = 1; i < lines.size(); ++i) CHECK(count_columns(lines[i]) == 23);
    // full precision survives the round trip
    std::istringstream first(lines[1]);
    std::string xs;
    std::getline(first, xs, ',');
    CHECK(std::stod(xs) == g.center(0));

    const auto prof = scratch("prof.csv");
    write_velocity_profiles(ic, g, {-0.1, 0.3}, prof);
    const auto pl = read_lines(prof);
    REQUIRE(pl.size() == 102);
    CHECK(count_columns(pl[0]) == 3);
    CHECK(pl[1].rfind("0,", 0) == 0);
    CHECK(pl[101].rfind("1,", 0) == 0);
    // u(zeta=0) = u0 + u1 + u8 in the left state
    std::istringstream r(pl[1]);
    std::string z, u1;
    std::getline(r, z, ',');
    std::getline(r, u1, ',');
    CHECK(std::stod(u1) == doctest::Approx(0.25 - 0.005 + 0.005));

    CHECK_THROWS_AS(write_snapshot(ic, g, Topography::flat(), "/nonexistent/dir/x.csv"), std::runtime_error);
    CHECK(format_double(0.1) == "0.10000000000000001");
}
