#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <sstream>

#include "doctest.h"
#include "kaclab/harness.hpp"

using namespace kaclab;
using cplx = std::complex<double>;

TEST_CASE("grid points") {
    CHECK(grid_points({-1.0, 1.0, 0.5}) ==
          std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(grid_points({0.0, 2.2, 0.5}) == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    CHECK(grid_points({3.0, 3.0, 1.0}) == std::vector<double>{3.0});

    const auto wide = grid_points({-10.0, 5.0, 0.25});
    REQUIRE(wide.size() == 61);
    CHECK(wide.front() == -10.0);
    CHECK(wide.back() == 5.0);

    CHECK_THROWS_AS(grid_points({0.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(grid_points({0.0, 1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("relative spectrum error") {
    CHECK(relative_error({cplx(1, 0), cplx(2, 0), cplx(3, 0)},
                         {cplx(1, 0), cplx(2, 0), cplx(3, 0)}) == 0.0);
    CHECK(relative_error({cplx(3, 0), cplx(1, 0), cplx(2, 0)},
                         {cplx(2, 0), cplx(1, 0), cplx(3 + 3e-9, 0)}) ==
          doctest::Approx(1e-9).epsilon(1e-6));
    CHECK(relative_error({cplx(0, 0)}, {cplx(0, 0)}) == 0.0);
    CHECK(std::isinf(relative_error({cplx(0, 0)}, {cplx(1e-300, 0)})));
    CHECK_THROWS_AS(relative_error({cplx(1, 0)}, {cplx(1, 0), cplx(2, 0)}),
                    std::invalid_argument);
}

TEST_CASE("largest imaginary part") {
    ComputedSpectrum c;
    c.values = {cplx(1, -3), cplx(2, 0.5)};
    CHECK(max_imag(c) == 3.0);
    CHECK(max_imag(ComputedSpectrum{}) == 0.0);
}

TEST_CASE("sweep visits the grid in lexicographic order") {
    SweepConfig cfg;
    cfg.n = 4;
    cfg.a_grid = {0.0, 1.0, 1.0};
    cfg.b.kind = BSpec::Kind::range;
    cfg.b.range = {0.0, 1.0, 1.0};
    const auto recs = run_sweep(cfg);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].a == 0.0);
    CHECK(recs[0].b == 0.0);
    CHECK(recs[1].a == 0.0);
    CHECK(recs[1].b == 1.0);
    CHECK(recs[2].a == 1.0);
    CHECK(recs[2].b == 0.0);
    CHECK(recs[3].a == 1.0);
    CHECK(recs[3].b == 1.0);
    for (const auto& r : recs) {
        CHECK(r.n == 4);
        CHECK(r.converged);
        CHECK(r.rel_error <= 1e-10);
        CHECK(r.solver == SolverKind::unsymmetric);
        CHECK(!r.balance);
    }
}

TEST_CASE("b specifications") {
    SweepConfig cfg;
    cfg.n = 5;
    cfg.a_grid = {-0.5, 0.5, 0.5};
    cfg.b.kind = BSpec::Kind::negated_a;
    auto recs = run_sweep(cfg);
    REQUIRE(recs.size() == 3);
    for (const auto& r : recs) CHECK(r.b == -r.a);

    cfg.b.kind = BSpec::Kind::equal_a;
    recs = run_sweep(cfg);
    for (const auto& r : recs) CHECK(r.b == r.a);

    cfg.b.kind = BSpec::Kind::fixed;
    cfg.b.value = 0.25;
    recs = run_sweep(cfg);
    for (const auto& r : recs) CHECK(r.b == 0.25);
}

TEST_CASE("families") {
    SweepConfig cfg;
    cfg.n = 4;
    cfg.family = Family::clement;
    auto recs = run_sweep(cfg);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].a == 0.0);
    CHECK(recs[0].b == 0.0);
    CHECK(recs[0].rel_error <= 1e-11);

    cfg.family = Family::special_a;
    cfg.a_grid = {1.0, 2.0, 1.0};
    recs = run_sweep(cfg);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) CHECK(r.b == -r.a);

    cfg.n = 5;
    recs = run_sweep(cfg);
    for (const auto& r : recs) CHECK(r.b == r.a);
}

TEST_CASE("failures are recorded and the sweep continues") {
    SweepConfig cfg;
    cfg.n = 4;
    cfg.solver = SolverKind::symmetric;
    cfg.a_grid = {-3.0, 0.0, 3.0};  // a = -3 has no symmetric form
    cfg.b.kind = BSpec::Kind::fixed;
    cfg.b.value = 0.0;
    const auto recs = run_sweep(cfg);
    REQUIRE(recs.size() == 2);
    CHECK(!recs[0].converged);
    CHECK(std::isnan(recs[0].rel_error));
    CHECK(std::isnan(recs[0].max_imag));
    CHECK(recs[1].converged);
    CHECK(recs[1].rel_error <= 1e-12);
}

TEST_CASE("parallel execution returns identical records") {
    SweepConfig cfg;
    cfg.n = 9;
    cfg.a_grid = {-0.5, 1.5, 0.25};
    cfg.b.kind = BSpec::Kind::equal_a;
    cfg.solver = SolverKind::bisection;
    const auto serial = run_sweep(cfg);
    cfg.jobs = 4;
    const auto parallel = run_sweep(cfg);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].a == parallel[i].a);
        CHECK(serial[i].b == parallel[i].b);
        CHECK(serial[i].rel_error == parallel[i].rel_error);
        CHECK(serial[i].max_imag == parallel[i].max_imag);
        CHECK(serial[i].converged == parallel[i].converged);
    }
}

TEST_CASE("csv round trip") {
    SweepConfig cfg;
    cfg.n = 3;
    cfg.a_grid = {0.0, 1.0, 0.5};
    cfg.b.kind = BSpec::Kind::fixed;
    cfg.b.value = -0.125;
    auto recs = run_sweep(cfg);
    recs[1].rel_error = std::nan("");  // exercise non-finite round trip

    std::ostringstream out;
    write_csv(recs, out, false);
    const std::string text = out.str();
    CHECK(text.rfind("n,a,b,solver,balance,rel_error,max_imag,converged,runtime_ms\n",
                     0) == 0);

    std::ostringstream again;
    write_csv(recs, again, false);
    CHECK(text == again.str());  // timings suppressed, so byte-identical

    std::istringstream in(text);
    const auto back = read_csv(in);
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].n == recs[i].n);
        CHECK(back[i].a == recs[i].a);
        CHECK(back[i].b == recs[i].b);
        CHECK(back[i].solver == recs[i].solver);
        CHECK(back[i].balance == recs[i].balance);
        if (std::isnan(recs[i].rel_error))
            CHECK(std::isnan(back[i].rel_error));
        else
            CHECK(back[i].rel_error == recs[i].rel_error);
        CHECK(back[i].converged == recs[i].converged);
        CHECK(back[i].runtime_ms == 0.0);
    }
}

TEST_CASE("csv rejects malformed input") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), std::runtime_error);
    std::istringstream header("x,y\n");
    CHECK_THROWS_AS(read_csv(header), std::runtime_error);
    std::istringstream fields(
        "n,a,b,solver,balance,rel_error,max_imag,converged,runtime_ms\n1,2,3\n");
    CHECK_THROWS_AS(read_csv(fields), std::runtime_error);
    std::istringstream solver(
        "n,a,b,solver,balance,rel_error,max_imag,converged,runtime_ms\n"
        "4,0,0,magic,0,1,0,1,0\n");
    CHECK_THROWS_AS(read_csv(solver), std::runtime_error);
    std::istringstream number(
        "n,a,b,solver,balance,rel_error,max_imag,converged,runtime_ms\n"
        "4,zero,0,bisection,0,1,0,1,0\n");
    CHECK_THROWS_AS(read_csv(number), std::runtime_error);
}

namespace {

SweepRecord record(double a, double rel, double imag = 0.0) {
    SweepRecord r;
    r.n = 7;
    r.a = a;
    r.b = 0.0;
    r.rel_error = rel;
    r.max_imag = imag;
    return r;
}

}  // namespace

TEST_CASE("svg rendering") {
    std::vector<SweepRecord> recs = {record(0.0, 1e-12), record(0.5, 1e-10),
                                     record(1.0, 1e-8)};
    const auto svg = render_svg(recs, "a", "rel_error", true);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find("log scale") != std::string::npos);
    CHECK(svg.find("linear scale shown") == std::string::npos);

    // A gap: the middle record is not finite.
    recs[1].rel_error = std::nan("");
    const auto gappy = render_svg(recs, "a", "rel_error", true);
    CHECK(gappy.find("1 point omitted") != std::string::npos);

    // All values non-positive under a log request: falls back to linear.
    std::vector<SweepRecord> zeros = {record(0.0, 0.0), record(1.0, 0.0)};
    const auto flat = render_svg(zeros, "a", "rel_error", true);
    CHECK(flat.find("linear scale shown") != std::string::npos);

    // Single point must still render.
    const auto lone = render_svg({record(2.0, 1e-9)}, "a", "rel_error", true);
    CHECK(lone.find("<circle") != std::string::npos);

    // Metric selection.
    const auto imag_plot =
        render_svg({record(0.0, 1e-9, 0.5), record(1.0, 1e-9, 2.5)}, "a", "max_imag",
                   false);
    CHECK(imag_plot.find("max_imag") != std::string::npos);
}

TEST_CASE("svg validation") {
    CHECK_THROWS_AS(render_svg({}, "a", "rel_error", true), std::invalid_argument);
    CHECK_THROWS_AS(render_svg({record(0.0, 1e-9)}, "c", "rel_error", true),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_svg({record(0.0, 1e-9)}, "a", "runtime", true),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_svg({record(1.0, 1e-9), record(1.0, 1e-8)}, "a", "rel_error",
                               true),
                    std::invalid_argument);
    auto mixed = std::vector<SweepRecord>{record(0.0, 1e-9), record(1.0, 1e-8)};
    mixed[1].n = 8;
    CHECK_THROWS_AS(render_svg(mixed, "a", "rel_error", true), std::invalid_argument);
}
