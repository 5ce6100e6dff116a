// Acceptance suite: one PASS/FAIL line per primary criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pairblock/analysis.hpp"
#include "pairblock/engine.hpp"
#include "pairblock/serialization.hpp"

using namespace pairblock;

namespace {

struct outcome {
        bool pass = true;
        std::string detail;

        void fail(const std::string& why)
        {
                if (pass)
                        detail = why;
                pass = false;
        }
};

const std::vector<point> classic = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

// n distinct canonical primitive directions with coordinates in [-2, 2].
std::vector<point>
random_directions(rng_t& rng, std::size_t n, std::size_t d)
{
        std::set<point> seen;
        std::vector<point> out;
        while (out.size() < n) {
                point v(d);
                for (auto& x : v)
                        x = coord_t(uniform_below(rng, 5)) - 2;
                if (gcd_vector(v) != 1)
                        continue;
                auto c = canonicalize_direction(v).vec();
                if (seen.insert(c).second)
                        out.push_back(c);
        }
        return out;
}

// Blocking along direction i judged from embedded values alone: a window is
// blocked iff some consecutive pair has its lower value in class x_i.
bool
oracle_window_blocked(const pairing_certificate& cert, const window& win, std::size_t i)
{
        const auto& r = cert.embedding().r;
        const auto p = cert.spec().p;
        for (coord_t k = 0; k + 1 < win.length; ++k) {
                bigint a = embed(win.at(k), r);
                bigint b = embed(win.at(k + 1), r);
                bigint lo = a < b ? a : b;
                if (std::int64_t(lo % p) == cert.residues().triples[i].x)
                        return true;
        }
        return false;
}

bool
oracle_blocked(const pairing_certificate& cert, coord_t m)
{
        for (std::size_t i = 0; i < cert.spec().n(); ++i) {
                bool all = true;
                for_each_window(cert.spec().board, cert.spec().dirs[i], m, [&](const window& win) {
                        if (all && !oracle_window_blocked(cert, win, i))
                                all = false;
                });
                if (!all)
                        return false;
        }
        return true;
}

std::vector<pairing_certificate>
blocking_suite_certificates()
{
        std::vector<pairing_certificate> certs;
        for (std::size_t n = 1; n <= 5; ++n)
                for (std::size_t d = 1; d <= 3; ++d)
                        for (coord_t side : {10, 20})
                                for (std::uint64_t seed = 0; seed < 10; ++seed) {
                                        rng_t rng(derive_seed(seed, n * 100 + d * 10 + std::uint64_t(side)));
                                        if (d == 1) {
                                                // one direction exists; n only sets the prime
                                                auto p = next_prime_at_least(2 * std::int64_t(n) + 1);
                                                certs.push_back(build_certificate(side, 1, {{1}}, seed, p));
                                        } else {
                                                certs.push_back(build_certificate(
                                                    side, d, random_directions(rng, n, d), seed));
                                        }
                                }
        return certs;
}

outcome
blocking_theorem(const std::vector<pairing_certificate>& certs)
{
        outcome o;
        std::uint64_t windows = 0;
        for (const auto& cert : certs) {
                const auto& spec = cert.spec();
                if (spec.board.dim > 1
                    && spec.p != next_prime_at_least(2 * std::int64_t(spec.n()) + 1))
                        o.fail("p is not the smallest prime >= 2n+1");
                if (spec.m != spec.p + 1)
                        o.fail("m != p+1");
                auto rep = verify_blocking(cert);
                windows += rep.windows_checked;
                if (!rep.blocked || rep.counterexample)
                        o.fail("unblocked window at N=" + std::to_string(spec.board.side)
                               + " d=" + std::to_string(spec.board.dim));
        }
        o.detail = std::to_string(certs.size()) + " certificates, " + std::to_string(windows)
                 + " windows" + (o.pass ? "" : ": " + o.detail);
        return o;
}

outcome
tightness_probe(const std::vector<pairing_certificate>& certs)
{
        outcome o;
        std::size_t unblocked = 0;
        for (const auto& cert : certs) {
                auto m = cert.spec().m - 1;
                bool fast = verify_blocking(cert, m).blocked;
                if (fast != oracle_blocked(cert, m))
                        o.fail("verify_blocking at m-1 disagrees with the embedded-value oracle");
                unblocked += !fast;
        }
        auto line = build_certificate(12, 1, {{1}}, 1);
        auto rep = verify_blocking(line, 3);
        if (line.spec().p != 3 || rep.blocked || !rep.counterexample)
                o.fail("d=1 p=3 certificate has no counterexample at m=3");
        else if (window_has_pair(*rep.counterexample, line))
                o.fail("reported counterexample contains a pair");
        if (o.pass)
                o.detail = std::to_string(unblocked) + "/" + std::to_string(certs.size())
                         + " unblocked at m-1; line counterexample at "
                         + to_string(rep.counterexample->start);
        return o;
}

outcome
lemma_check()
{
        outcome o;
        std::size_t q7_feasible = 0, total = 0;
        for (std::int64_t q : {3, 5, 7, 11}) {
                std::size_t n = std::size_t(q - 1) / 2;
                std::vector<std::int64_t> d(n, 1);
                for (;;) {
                        ++total;
                        auto sys = try_solve_residues(q, d);
                        bool oracle = oracle_solve(q, d).has_value();
                        if (!sys || !verify_residue_system(*sys))
                                o.fail("solver failed at q=" + std::to_string(q));
                        if (sys.has_value() != oracle)
                                o.fail("solver and oracle disagree at q=" + std::to_string(q));
                        if (q == 7 && sys)
                                ++q7_feasible;
                        std::size_t i = n;
                        while (i-- > 0) {
                                if (d[i] < q - 1) {
                                        ++d[i];
                                        break;
                                }
                                d[i] = 1;
                        }
                        if (i == std::size_t(-1))
                                break;
                }
        }
        if (q7_feasible != 216)
                o.fail("q=7 feasible count " + std::to_string(q7_feasible));
        if (o.pass)
                o.detail = std::to_string(total) + " delta vectors; q=7 " + std::to_string(q7_feasible)
                         + "/216 feasible";
        return o;
}

outcome
mod6_check()
{
        outcome o;
        auto rep = mod6_obstruction_check();
        if (!rep.obstruction_holds())
                o.fail("obstruction does not hold");
        o.detail = std::to_string(rep.infeasible_cases) + "/" + std::to_string(rep.valid_cases)
                 + " infeasible, " + std::to_string(rep.excluded_cases) + " excluded (delta_3 = 0), control "
                 + (rep.control_feasible ? "feasible" : "infeasible");
        return o;
}

outcome
strong_draw()
{
        outcome o;
        auto cert = build_certificate(20, 2, classic, 1);
        if (cert.spec().m != 12)
                o.fail("classic m != 12");
        auto stats = simulate_batch(cert, {maker_kind::random, {}}, 1000, 2024);
        if (stats.games != 1000 || stats.maker_wins != 0 || stats.audit_failures != 0)
                o.fail(std::to_string(stats.maker_wins) + " Maker wins, "
                       + std::to_string(stats.audit_failures) + " audit failures");
        auto line = build_certificate(12, 1, {{1}}, 1);
        auto control = simulate_batch(line, {maker_kind::greedy, {}}, 100, 2024,
                                      breaker_policy::smallest_empty);
        if (control.maker_wins < 1)
                o.fail("inverted control produced no Maker win");
        if (o.pass)
                o.detail = "1000 draws; control " + std::to_string(control.maker_wins) + "/100 Maker wins";
        return o;
}

outcome
lower_bound()
{
        outcome o;
        auto line = build_certificate(1, 1, {{1}}, 1);
        auto one = lower_bound_demo(line.spec().dirs, 100, 1, &line);
        auto plane = build_certificate(1, 2, {{1, 0}, {0, 1}}, 1);
        auto two = lower_bound_demo(plane.spec().dirs, 100, 2, &plane);
        for (const auto* rep : {&one, &two}) {
                if (rep->refuted != 100 || rep->witnesses_validated != 100)
                        o.fail("n=" + std::to_string(rep->n) + ": " + std::to_string(rep->refuted)
                               + "/100 refuted");
                if (!rep->certificate_refuted || *rep->certificate_refuted)
                        o.fail("certificate refuted at m=p+1");
        }
        if (o.pass)
                o.detail = "n=1 100/100, n=2 100/100; certificates survive at m=p+1";
        return o;
}

outcome
embedding_invariants()
{
        outcome o;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
                rng_t rng(derive_seed(seed, 7));
                std::size_t d = 1 + seed % 3;
                coord_t side = coord_t(1 + seed % 8);
                std::size_t n = d == 1 ? 1 : 1 + uniform_below(rng, 4);
                auto cert = build_certificate(side, d, d == 1 ? std::vector<point>{{1}}
                                                              : random_directions(rng, n, d),
                                              seed);
                const auto& emb = cert.embedding();
                const auto p = cert.spec().p;
                bigint prefix = 0;
                for (std::size_t j = 0; j < d; ++j) {
                        if (emb.r[j] % p != emb.u_prime[j] % p)
                                o.fail("r not congruent to u' mod p");
                        if (emb.r[j] <= side * prefix)
                                o.fail("chain inequality fails");
                        prefix += emb.r[j];
                }
                for (const auto& v : cert.spec().dirs) {
                        bigint dot = 0;
                        for (std::size_t j = 0; j < d; ++j)
                                dot += emb.r[j] * v[j];
                        if (dot % p == 0)
                                o.fail("p divides an offset");
                }
                std::set<bigint> images;
                cert.spec().board.for_each_point([&](const point& w) { images.insert(embed(w, emb.r)); });
                if (images.size() != cert.spec().board.cell_count())
                        o.fail("embed not injective");
        }
        if (o.pass)
                o.detail = "200 constructions, N <= 8, d <= 3";
        return o;
}

outcome
conjecture_searchers()
{
        outcome o;
        for (auto [n, vectors] : {std::pair<std::size_t, std::vector<point>>{1, {{1, 0}}},
                                  std::pair<std::size_t, std::vector<point>>{2, {{1, 0}, {0, 1}}}}) {
                auto part = conjecture2_search(n, 2, vectors);
                if (!part || !validate_conjecture2(n, 2, vectors, *part))
                        o.fail("no validated partition for n=" + std::to_string(n));
        }
        colored_graph g{4,
                        {{0, 1, "A"}, {1, 2, "A"}, {2, 3, "A"}, {3, 0, "A"},
                         {0, 2, "B"}, {2, 1, "B"}, {1, 3, "B"}, {3, 0, "B"}}};
        auto m = conjecture3_search(g);
        if (!m || !validate_rainbow_matching(g, *m))
                o.fail("no validated rainbow matching");
        if (o.pass)
                o.detail = "Z_2^2 and Z_4^2 partitions, 4-vertex rainbow matching";
        return o;
}

outcome
round_trip()
{
        outcome o;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
                rng_t rng(derive_seed(seed, 11));
                std::size_t d = 1 + seed % 3;
                auto cert = build_certificate(d == 3 ? 5 : 9, d,
                                              d == 1 ? std::vector<point>{{1}}
                                                     : random_directions(rng, 1 + seed % 4, d),
                                              seed);
                auto text = dump_canonical(certificate_to_json(cert));
                auto loaded = certificate_from_string(text);
                if (!verify_blocking(loaded).blocked)
                        o.fail("reloaded certificate does not verify");
                if (dump_canonical(certificate_to_json(loaded)) != text)
                        o.fail("serialization not canonical");
                cert.spec().board.for_each_point([&](const point& w) {
                        if (partner(w, loaded) != partner(w, cert))
                                o.fail("partner differs at " + to_string(w));
                });
        }
        if (o.pass)
                o.detail = "20 certificates";
        return o;
}

} // namespace

int
main()
{
        int failures = 0;
        auto report = [&](const char* name, const std::function<outcome()>& check) {
                auto t0 = std::chrono::steady_clock::now();
                outcome o;
                try {
                        o = check();
                } catch (const std::exception& e) {
                        o.fail(std::string("exception: ") + e.what());
                }
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                std::printf("%s %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
                std::fflush(stdout);
                failures += !o.pass;
        };

        std::vector<pairing_certificate> certs;
        report("blocking_theorem", [&] {
                certs = blocking_suite_certificates();
                return blocking_theorem(certs);
        });
        report("tightness_probe", [&] { return tightness_probe(certs); });
        report("lemma_exhaustive", lemma_check);
        report("mod6_obstruction", mod6_check);
        report("strong_draw_simulation", strong_draw);
        report("lower_bound_refuter", lower_bound);
        report("embedding_invariants", embedding_invariants);
        report("conjecture_searchers", conjecture_searchers);
        report("certificate_round_trip", round_trip);
        return failures == 0 ? 0 : 1;
}
