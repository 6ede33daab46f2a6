// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Pass a criterion number to run only that one.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pfu/constructions.hpp"
#include "pfu/criteria.hpp"
#include "pfu/harness.hpp"
#include "pfu/io.hpp"
#include "pfu/matching.hpp"
#include "pfu/path_factor.hpp"
#include "pfu/sun.hpp"

using namespace pfu;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& why)
{
    if (o.pass) o.detail = why;
    o.pass = false;
}

std::string summary(const ValidationReport& r)
{
    std::ostringstream s;
    s << r.theorem << ": examined " << r.graphs_examined << ", hits " << r.hypothesis_hits << ", counterexamples "
      << r.counterexamples.size() << ", disagreements " << r.disagreements.size() << ", budget-exhausted "
      << r.budget_exhausted.size();
    for (const auto& n : r.notes) s << " [" << n << "]";
    return s.str();
}

void absorb(Outcome& o, const ValidationReport& r)
{
    if (!o.detail.empty() && o.pass) o.detail += "; ";
    if (!r.passed() || !r.budget_exhausted.empty()) {
        fail(o, summary(r));
        return;
    }
    if (o.pass) o.detail += summary(r);
}

template <class Demo>
void run_demo(Outcome& o, Demo demo, double limit, const std::string& label)
{
    auto t0 = Clock::now();
    try {
        auto r = demo();
        const double dt = seconds_since(t0);
        if (!r.passed()) fail(o, label + " failed a check");
        if (dt > limit) fail(o, label + " took " + std::to_string(dt) + " s");
        if (o.pass) {
            if (!o.detail.empty()) o.detail += "; ";
            o.detail += label + ": sun " + std::to_string(r.sun_count) + " > " + std::to_string(r.bound);
            if (r.uniform) o.detail += std::string(", uniform=") + (*r.uniform ? "true" : "false");
        }
    } catch (const std::exception& e) {
        fail(o, label + ": " + e.what());
    }
}

Outcome first_sharpness()
{
    Outcome o;
    run_demo(o, [] { return remark1_demo(0); }, 10.0, "t=0");
    for (int t = 1; t <= 2; ++t) run_demo(o, [t] { return remark1_demo(t); }, 1.0, "t=" + std::to_string(t));
    auto r0 = remark1_demo(0);
    if (!r0.full_check || r0.uniform != std::optional<bool>(false)) fail(o, "t=0 full uniformity check missing");
    return o;
}

Outcome second_sharpness()
{
    Outcome o;
    for (int k = 1; k <= 2; ++k) run_demo(o, [k] { return remark2_demo(k, 1); }, 30.0, "k=" + std::to_string(k));
    auto r1 = remark2_demo(1, 1);
    if (!r1.full_check || r1.uniform != std::optional<bool>(false)) fail(o, "k=1 full uniformity check missing");
    return o;
}

Outcome factor_criterion()
{
    Outcome o;
    ValidationScope scope;
    scope.exhaustive_max_order = 6;
    scope.random = {10000, {7, 8}, Rational(1, 2), 11};
    absorb(o, validate(Theorem::thm11, scope));
    // A sparser sample exercises more graphs without a factor.
    ValidationScope sparse;
    sparse.random = {10000, {7, 8}, Rational(1, 4), 12};
    absorb(o, validate(Theorem::thm11, sparse));
    return o;
}

Outcome covered_criterion()
{
    Outcome o;
    ValidationScope scope;
    scope.exhaustive_max_order = 6;
    scope.random = {5000, {7, 8}, Rational(1, 2), 21};
    absorb(o, validate(Theorem::thm12, scope));
    ValidationScope sparse;
    sparse.random = {5000, {7, 8}, Rational(3, 10), 22};
    absorb(o, validate(Theorem::thm12, sparse));
    return o;
}

Outcome degree_condition()
{
    Outcome o;
    ValidationScope scope;
    scope.exhaustive_max_order = 8;
    // 5,000 graphs split evenly over n = 9 and n = 10; dense so the
    // hypothesis fires.
    scope.random = {2500, {9, 10}, Rational(4, 5), 31};
    auto r = validate(Theorem::thm13, scope);
    absorb(o, r);
    if (r.hypothesis_hits == 0) fail(o, "no hypothesis hits");
    return o;
}

Outcome neighborhood_condition()
{
    Outcome o;
    const Rational gammas[] = {Rational(1, 3), Rational(2, 3), Rational(1)};
    std::uint64_t seed = 41;
    for (const auto& gamma : gammas) {
        ValidationScope scope;
        // 2,000 graphs per setting, 400 at each n in 8..12.
        scope.random = {400, {8, 9, 10, 11, 12}, Rational(17, 20), seed++};
        scope.thm14 = Thm14Params{1, gamma};
        auto r = validate(Theorem::thm14, scope);
        absorb(o, r);
        if (o.pass) o.detail += " (gamma=" + gamma.to_string() + ")";
        if (r.hypothesis_hits == 0 && r.notes.empty()) fail(o, "no hits and no note for gamma=" + gamma.to_string());
    }
    return o;
}

Outcome sun_recognizer()
{
    Outcome o;
    std::uint64_t checked = 0;
    std::uint64_t suns = 0;
    auto check = [&](const Graph& g) {
        ++checked;
        const bool fast = is_sun(g).is_sun();
        if (fast) ++suns;
        if (fast != oracle::is_sun(g)) fail(o, "disagreement on " + to_graph6(g));
    };
    for (int n = 1; n <= 6; ++n) {
        GraphEnumerator e(n, EnumerationMode::connected);
        while (auto g = e.next()) check(*g);
    }
    for (int n = 7; n <= 8; ++n) {
        RandomGraphStream s(n, 5000, Rational(3, 10), 50 + n, true);
        while (auto g = s.next()) check(*g);
    }
    if (o.pass) o.detail = std::to_string(checked) + " connected graphs, " + std::to_string(suns) + " suns, 0 disagreements";
    return o;
}

Outcome matching()
{
    Outcome o;
    std::uint64_t even_checked = 0;
    for (int n = 4; n <= 7; ++n) {
        RandomGraphStream s(n, 2000, Rational(1, 2), 60 + n);
        while (auto g = s.next()) {
            auto m = maximum_matching(*g);
            if (!is_valid_matching(*g, m) || m.size() != oracle::max_matching(*g))
                fail(o, "matching size wrong on " + to_graph6(*g));
            if (n % 2 == 0) {
                ++even_checked;
                if (is_factor_critical(*g)) fail(o, "even-order graph reported factor-critical: " + to_graph6(*g));
            }
        }
    }
    for (int n = 3; n <= 9; n += 2)
        if (!is_factor_critical(cycle_graph(n))) fail(o, "C" + std::to_string(n) + " not factor-critical");
    if (o.pass)
        o.detail = "8000 graphs match brute force; C3..C9 factor-critical; " + std::to_string(even_checked) +
                   " even-order graphs not";
    return o;
}

Outcome normal_form()
{
    Outcome o;
    std::uint64_t checked = 0;
    std::uint64_t with_factor = 0;
    FactorQuery bounded;
    FactorQuery unbounded;
    unbounded.max_path_order = 0;
    auto check = [&](const Graph& g) {
        ++checked;
        const bool a = find_p3_factor(g, bounded).has_value();
        if (a) ++with_factor;
        if (a != find_p3_factor(g, unbounded).has_value()) fail(o, "existence differs on " + to_graph6(g));
        auto edges = g.edges();
        if (edges.empty()) return;
        FactorQuery rb = bounded;
        FactorQuery ru = unbounded;
        rb.require = ru.require = edges[checked % edges.size()];
        if (find_p3_factor(g, rb).has_value() != find_p3_factor(g, ru).has_value())
            fail(o, "required-edge existence differs on " + to_graph6(g));
    };
    for (int n = 1; n <= 6; ++n) {
        GraphEnumerator e(n, EnumerationMode::all);
        while (auto g = e.next()) check(*g);
    }
    for (int n = 7; n <= 8; ++n) {
        RandomGraphStream s(n, 5000, Rational(2, 5), 70 + n);
        while (auto g = s.next()) check(*g);
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " graphs, " + std::to_string(with_factor) + " with a factor, 0 disagreements";
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria = {
        {1, "first sharpness construction (t = 0, 1, 2)", 12.0, first_sharpness},
        {2, "second sharpness construction (k = 1, 2)", 30.0, second_sharpness},
        {3, "factor criterion equals exhaustive search", 600.0, factor_criterion},
        {4, "coveredness criterion equals exhaustive search", 900.0, covered_criterion},
        {5, "degree condition implies uniform", 1200.0, degree_condition},
        {6, "neighborhood condition implies uniform", 1200.0, neighborhood_condition},
        {7, "sun recognizer equals definition", 600.0, sun_recognizer},
        {8, "maximum matching and factor-criticality", 600.0, matching},
        {9, "path orders 3..5 suffice", 600.0, normal_form},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        if (dt > c.limit_seconds) fail(o, "over time limit " + std::to_string(c.limit_seconds) + " s");
        if (!o.pass) ++failures;
        std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), dt);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
