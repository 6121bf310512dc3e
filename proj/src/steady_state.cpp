#include "swlme/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swlme {

const char* to_string(Branch b) {
    switch (b) {
        case Branch::subcritical: return "subcritical";
        case Branch::supercritical: return "supercritical";
        case Branch::trivial: return "trivial";
    }
    return "?";
}

Branch classify_branch(const State& s, const ModelParams& p) {
    const double fr = froude(s, p);
    if (fr < 1.0 - kCriticalBand) return Branch::subcritical;
    if (fr > 1.0 + kCriticalBand) return Branch::supercritical;
    return Branch::trivial;
}

SteadyProfile steady_constants(const State& s, double x_center, double z_center, const ModelParams& p) {
    if (!(s.h() > 0.0)) throw DomainError("steady constants need h > 0");
    SteadyProfile prof;
    const double h = s.h();
    const double u0 = s.u(0);
    prof.c1 = s.q(0);
    double energy = 0.5 * u0 * u0 + p.g * (h + z_center);
    for (int i = 1; i <= s.n_moments(); ++i) {
        const double ui = s.u(i);
        energy += 1.5 * ui * ui / (2.0 * i + 1.0);
        prof.ck[static_cast<std::size_t>(i)] = ui / h;
    }
    prof.c2 = energy;
    prof.branch = classify_branch(s, p);
    prof.h_ref = h;
    prof.x_ref = x_center;
    prof.anchor = s;
    return prof;
}

SteadyProfile trivial_profile(const State& s, double x_center) {
    SteadyProfile prof;
    prof.branch = Branch::trivial;
    prof.h_ref = s.h();
    prof.x_ref = x_center;
    prof.c1 = s.q(0);
    prof.anchor = s;
    return prof;
}

namespace {

// sum_i C_k^2 / (2i+1)
double moment_weight(const SteadyProfile& prof) {
    double acc = 0.0;
    for (int i = 1; i <= prof.n_moments(); ++i) {
        const double c = prof.ck[static_cast<std::size_t>(i)];
        acc += c * c / (2.0 * i + 1.0);
    }
    return acc;
}

struct Residual {
    double c1sq, g, m, c2;
    double value(double h, double z) const { return 0.5 * c1sq / (h * h) + g * (h + z) + 1.5 * m * h * h - c2; }
    double slope(double h) const { return -c1sq / (h * h * h) + g + 3.0 * m * h; }
};

}  // namespace

double steady_residual(const SteadyProfile& prof, double h, double z, const ModelParams& p) {
    return Residual{prof.c1 * prof.c1, p.g, moment_weight(prof), prof.c2}.value(h, z);
}

double steady_residual_derivative(const SteadyProfile& prof, double h, const ModelParams& p) {
    return Residual{prof.c1 * prof.c1, p.g, moment_weight(prof), prof.c2}.slope(h);
}

SteadyRoot solve_steady_height(const SteadyProfile& prof, double z, const ModelParams& p, double h_guess) {
    if (prof.branch == Branch::trivial) return {prof.h_ref, 0};
    if (!(h_guess > 0.0)) throw DomainError("steady Newton needs a positive initial guess");

    const Residual res{prof.c1 * prof.c1, p.g, moment_weight(prof), prof.c2};
    const double tol = 1e-13 * std::max(1.0, std::abs(prof.c2));

    if (res.c1sq == 0.0 && res.m == 0.0) {
        const double h = prof.c2 / p.g - z;
        if (!(h > 0.0)) throw NoSteadyRoot("lake-at-rest level below the bottom");
        return {h, 0};
    }

    const double sign = prof.branch == Branch::subcritical ? 1.0 : -1.0;
    const double h_max = 10.0 * std::max(prof.h_ref, prof.c2 / p.g);

    // Plain Newton, valid while iterates stay on the branch side of the critical height.
    double h = h_guess;
    int it = 0;
    for (; it < kSteadyMaxIterations; ++it) {
        const double r = res.value(h, z);
        if (std::abs(r) <= tol) {
            // one polishing step; the residual is already at rounding level
            const double d = res.slope(h);
            if (sign * d > 0.0) {
                const double hn = h - r / d;
                if (hn > 0.0) h = hn;
            }
            return {h, it + 1};
        }
        const double d = res.slope(h);
        if (!(sign * d > 0.0)) break;
        const double hn = h - r / d;
        if (!(hn > 0.0) || hn > h_max) break;
        h = hn;
    }

    // Bracketing fallback. R is convex in h (R'' > 0), so R' vanishes at a single
    // critical height and each branch holds at most one root.
    double h_crit = 0.0;
    if (res.c1sq > 0.0) {
        double hi = std::cbrt(res.c1sq / p.g);
        while (res.slope(hi) < 0.0) hi *= 2.0;
        double lo = hi;
        while (res.slope(lo) > 0.0) lo *= 0.5;
        for (int k = 0; k < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++k) {
            const double mid = 0.5 * (lo + hi);
            (res.slope(mid) < 0.0 ? lo : hi) = mid;
        }
        h_crit = 0.5 * (lo + hi);
    }
    const double r_crit = h_crit > 0.0 ? res.value(h_crit, z) : p.g * z - res.c2;
    if (r_crit > 0.0) throw NoSteadyRoot("steady energy level below the critical value");

    double lo, hi;
    if (sign > 0.0) {
        lo = h_crit;
        hi = std::max(h_max, 2.0 * h_crit);
        int grow = 0;
        while (res.value(hi, z) < 0.0) {
            hi *= 2.0;
            if (++grow > 200) throw NoSteadyRoot("no subcritical root bracket");
        }
    } else {
        if (h_crit <= 0.0) throw NoSteadyRoot("supercritical branch requires nonzero mass flux");
        hi = h_crit;
        lo = 0.5 * h_crit;
        int shrink = 0;
        while (res.value(lo, z) < 0.0) {
            lo *= 0.5;
            if (++shrink > 200) throw NoSteadyRoot("no supercritical root bracket");
        }
    }
    // Invariant: R(lo) and R(hi) have opposite signs.
    const bool increasing = sign > 0.0;
    for (int k = 0; k < 300; ++k, ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = res.value(mid, z);
        if (std::abs(r) <= tol || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * mid) {
            return {mid, it + 1};
        }
        if ((r < 0.0) == increasing) lo = mid;
        else hi = mid;
    }
    throw NoSteadyRoot("steady root bisection did not converge");
}

State steady_state_at_height(const SteadyProfile& prof, double h, const ModelParams& p) {
    const int n = prof.n_moments();
    State s(n);
    s.set_h(h);
    s.set_q(0, prof.c1);
    for (int i = 1; i <= n; ++i) s.set_q(i, prof.ck[static_cast<std::size_t>(i)] * h * h);
    s.set_hpi(0.5 * p.g * h * h * h);
    return s;
}

State steady_eval(const SteadyProfile& prof, double x, const Topography& topo, const ModelParams& p) {
    if (prof.branch == Branch::trivial || x == prof.x_ref) {
        State s = prof.anchor;
        s.set_hpi(0.5 * p.g * s.h() * s.h() * s.h());
        return s;
    }
    const double h = steady_height(prof, topo.z(x), p, prof.h_ref);
    return steady_state_at_height(prof, h, p);
}

}  // namespace swlme
