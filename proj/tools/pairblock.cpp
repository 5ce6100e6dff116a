// pairblock: construct, verify and play Breaker pairing strategies for
// Maker-Breaker m-in-a-row games on [N]^d.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pairblock/analysis.hpp"
#include "pairblock/engine.hpp"
#include "pairblock/pairing.hpp"
#include "pairblock/residue.hpp"
#include "pairblock/serialization.hpp"
#include "pairblock/service.hpp"

namespace pb = pairblock;

namespace {

constexpr const char* classic_dirs = "1,0;0,1;1,1;1,-1";

struct construction_flags {
        pb::coord_t side = 20;
        std::optional<std::size_t> dim;
        std::string dirs = classic_dirs;
        std::uint64_t seed = 1;
        std::optional<std::int64_t> p;
};

void
add_construction_flags(CLI::App* cmd, construction_flags& f)
{
        cmd->add_option("-N,--side", f.side, "Board side length N (board is [N]^d)");
        cmd->add_option("-d,--dim", f.dim, "Dimension d (defaults to the direction length)");
        cmd->add_option("--dirs", f.dirs, "Winning directions, e.g. \"1,0;0,1;1,1;1,-1\"");
        cmd->add_option("--seed", f.seed, "Seed for choosing u'");
        cmd->add_option("-p,--prime", f.p, "Prime override (>= 2n+1)");
}

pb::pairing_certificate
construct_from(const construction_flags& f)
{
        auto vectors = pb::parse_vector_list(f.dirs);
        std::size_t dim = f.dim.value_or(vectors.front().size());
        for (const auto& v : vectors)
                if (v.size() != dim)
                        throw pb::error(pb::errc::dimension_mismatch,
                                        "direction " + pb::to_string(v) + " does not have "
                                            + std::to_string(dim) + " coordinates");
        return pb::build_certificate(f.side, dim, vectors, f.seed, f.p);
}

std::string
read_file(const std::string& path)
{
        std::ifstream in(path);
        if (!in)
                throw pb::error(pb::errc::parse_error, "cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
}

pb::pairing_certificate
load_or_construct(const std::string& cert_path, const construction_flags& f)
{
        if (!cert_path.empty())
                return pb::certificate_from_string(read_file(cert_path));
        return construct_from(f);
}

void
print_summary(std::ostream& os, const pb::pairing_certificate& cert)
{
        const auto& spec = cert.spec();
        const auto& emb = cert.embedding();
        os << "p=" << spec.p << " m=" << spec.m << " N=" << spec.board.side
           << " d=" << spec.board.dim << " n=" << spec.n() << '\n';
        os << "u_prime=" << pb::to_string(emb.u_prime) << " base=" << emb.base << '\n';
        for (std::size_t i = 0; i < spec.n(); ++i) {
                const auto& t = cert.residues().triples[i];
                os << "direction " << i + 1 << ' ' << pb::to_string(spec.dirs[i].vec())
                   << ": d mod p=" << t.delta << " sign=" << (emb.offsets[i].sign > 0 ? "+1" : "-1")
                   << " x=" << t.x << " y=" << t.y << '\n';
        }
}

pb::breaker_policy
parse_breaker(const std::string& name)
{
        if (name == "pairing")
                return pb::breaker_policy::pairing;
        if (name == "smallest-empty")
                return pb::breaker_policy::smallest_empty;
        throw pb::error(pb::errc::parse_error, "unknown breaker policy '" + name + "'");
}

std::vector<pb::direction>
default_lower_bound_dirs(std::size_t n)
{
        switch (n) {
        case 1: return pb::canonical_direction_set(pb::parse_vector_list("1"));
        case 2: return pb::canonical_direction_set(pb::parse_vector_list("1,0;0,1"));
        case 3: return pb::canonical_direction_set(pb::parse_vector_list("1,0;0,1;1,1"));
        case 4: return pb::canonical_direction_set(pb::parse_vector_list(classic_dirs));
        default: break;
        }
        throw pb::error(pb::errc::parse_error, "give --dirs for n > 4");
}

httplib::Server* running_server = nullptr;

void
stop_server(int)
{
        if (running_server)
                running_server->stop();
}

} // namespace

int
main(int argc, char** argv)
{
        CLI::App app{"Breaker pairing strategies for Maker-Breaker m-in-a-row games"};
        app.require_subcommand(1);

        // construct
        construction_flags cons;
        std::string out_path;
        auto* construct = app.add_subcommand("construct", "Build a pairing certificate");
        add_construction_flags(construct, cons);
        construct->add_option("-o,--out", out_path, "Certificate output file (default: stdout)");

        // verify
        std::string verify_path;
        std::optional<std::int64_t> m_override;
        auto* verify = app.add_subcommand("verify", "Check that a certificate blocks every window");
        verify->add_option("certificate", verify_path, "Certificate JSON file")->required();
        verify->add_option("--m-override", m_override, "Verify with this window length instead of m");

        // play
        construction_flags play_cons;
        std::string play_cert, play_maker = "random", play_moves, play_breaker = "pairing";
        std::uint64_t play_seed = 1;
        auto* play = app.add_subcommand("play", "Play one game and print a JSON-lines transcript");
        add_construction_flags(play, play_cons);
        play->add_option("--cert", play_cert, "Use this certificate instead of constructing one");
        play->add_option("--maker", play_maker, "random | greedy | scripted");
        play->add_option("--moves", play_moves, "Scripted Maker moves, e.g. \"1,1;2,2\"");
        play->add_option("--maker-seed", play_seed, "Seed for the Maker strategy");
        play->add_option("--breaker", play_breaker, "pairing | smallest-empty");

        // simulate
        construction_flags sim_cons;
        std::string sim_cert, sim_maker = "random", sim_breaker = "pairing";
        std::uint64_t sim_games = 100, sim_seed = 1;
        auto* simulate = app.add_subcommand("simulate", "Play a seeded batch of games");
        add_construction_flags(simulate, sim_cons);
        simulate->add_option("--cert", sim_cert, "Use this certificate instead of constructing one");
        simulate->add_option("--games", sim_games, "Number of games");
        simulate->add_option("--maker", sim_maker, "random | greedy");
        simulate->add_option("--maker-seed", sim_seed, "Master seed for Maker strategies");
        simulate->add_option("--breaker", sim_breaker, "pairing | smallest-empty");

        // analyze
        auto* analyze = app.add_subcommand("analyze", "Lower bound, obstruction and conjecture tools");
        analyze->require_subcommand(1);

        bool mod6_csv = false;
        auto* mod6 = analyze->add_subcommand("mod6", "Mod-6 obstruction table for (1,0),(0,1),(1,1)");
        mod6->add_flag("--csv", mod6_csv, "Emit CSV instead of JSON");

        std::size_t lb_n = 2;
        std::string lb_dirs;
        std::uint64_t lb_trials = 100, lb_seed = 1;
        auto* lower = analyze->add_subcommand("lower-bound", "Refute random periodic pairings at m = 2n");
        lower->add_option("-n", lb_n, "Number of directions (1..4 use default sets)");
        lower->add_option("--dirs", lb_dirs, "Explicit directions");
        lower->add_option("--trials", lb_trials, "Sampled pairings");
        lower->add_option("--seed", lb_seed, "Sampling seed");

        std::int64_t atlas_q = 5;
        std::size_t atlas_n = 2;
        bool atlas_csv = false;
        auto* atlas = analyze->add_subcommand("atlas", "Residue-system feasibility for every delta vector");
        atlas->add_option("-q", atlas_q, "Modulus (<= 13)");
        atlas->add_option("-n", atlas_n, "Number of deltas");
        atlas->add_flag("--csv", atlas_csv, "Emit CSV instead of JSON");

        std::size_t c2_n = 2, c2_d = 2;
        std::string c2_vectors = "1,0;0,1";
        auto* conj2 = analyze->add_subcommand("conj2", "Search a partition of Z_2n^d");
        conj2->add_option("-n", c2_n, "n");
        conj2->add_option("-d", c2_d, "d");
        conj2->add_option("--vectors", c2_vectors, "The n vectors of Z_2n^d");

        std::string c3_graph;
        auto* conj3 = analyze->add_subcommand("conj3", "Search a rainbow perfect matching");
        conj3->add_option("--graph", c3_graph, "Colored graph JSON file")->required();

        // serve
        std::string bind_arg, snapshot_path;
        auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON game service");
        serve->add_option("--bind", bind_arg, "host:port (default $PAIRBLOCK_BIND or 127.0.0.1:8080)");
        serve->add_option("--snapshot", snapshot_path, "Write all sessions here on shutdown");

        CLI11_PARSE(app, argc, argv);

        if (*construct) {
                try {
                        auto cert = construct_from(cons);
                        auto doc = pb::dump_canonical(pb::certificate_to_json(cert));
                        if (out_path.empty()) {
                                print_summary(std::cerr, cert);
                                std::cout << doc;
                        } else {
                                std::ofstream out(out_path);
                                if (!out)
                                        throw pb::error(pb::errc::parse_error, "cannot write " + out_path);
                                out << doc;
                                print_summary(std::cout, cert);
                        }
                        return 0;
                } catch (const pb::error& e) {
                        std::cerr << "error: " << e.what() << '\n';
                        return 1;
                }
        }

        if (*verify) {
                pb::pairing_certificate cert;
                try {
                        cert = pb::certificate_from_string(read_file(verify_path));
                } catch (const pb::error& e) {
                        std::cerr << "error: " << e.what() << '\n';
                        return 2;
                }
                auto rep = pb::verify_blocking(cert, m_override);
                std::cout << pb::report_to_json(rep).dump(2) << '\n';
                return rep.blocked ? 0 : 1;
        }

        try {
                if (*play) {
                        auto cert = load_or_construct(play_cert, play_cons);
                        pb::maker_config config{pb::parse_maker_kind(play_maker), {}};
                        if (!play_moves.empty())
                                config.script = pb::parse_vector_list(play_moves);
                        auto maker = pb::make_maker(config, play_seed);
                        auto result = pb::play_game(cert, *maker, parse_breaker(play_breaker));
                        pb::write_transcript(std::cout, result);
                        return 0;
                }
                if (*simulate) {
                        auto cert = load_or_construct(sim_cert, sim_cons);
                        pb::maker_config config{pb::parse_maker_kind(sim_maker), {}};
                        auto stats = pb::simulate_batch(cert, config, sim_games, sim_seed,
                                                        parse_breaker(sim_breaker));
                        auto doc = pb::batch_stats_json(stats);
                        doc["p"] = cert.spec().p;
                        doc["m"] = cert.spec().m;
                        std::cout << doc.dump(2) << '\n';
                        return 0;
                }
                if (*mod6) {
                        auto rep = pb::mod6_obstruction_check();
                        if (mod6_csv)
                                pb::write_mod6_csv(std::cout, rep);
                        else
                                std::cout << pb::mod6_json(rep).dump(2) << '\n';
                        return 0;
                }
                if (*lower) {
                        auto dirs = lb_dirs.empty()
                                        ? default_lower_bound_dirs(lb_n)
                                        : pb::canonical_direction_set(pb::parse_vector_list(lb_dirs));
                        std::vector<pb::point> raw;
                        for (const auto& v : dirs)
                                raw.push_back(v.vec());
                        auto cert = pb::build_certificate(1, dirs.front().dim(), raw, lb_seed);
                        auto rep = pb::lower_bound_demo(dirs, lb_trials, lb_seed, &cert);
                        std::cout << pb::lower_bound_json(rep).dump(2) << '\n';
                        return 0;
                }
                if (*atlas) {
                        if (atlas_q > 13)
                                throw pb::error(pb::errc::invariant_violation, "atlas limited to q <= 13");
                        auto entries = pb::feasibility_atlas(atlas_q, atlas_n);
                        if (atlas_csv) {
                                pb::write_atlas_csv(std::cout, entries, atlas_n);
                        } else {
                                pb::json rows = pb::json::array();
                                std::size_t feasible = 0;
                                for (const auto& e : entries) {
                                        rows.push_back({{"deltas", e.deltas}, {"feasible", e.feasible}});
                                        feasible += e.feasible;
                                }
                                std::cout << pb::json{{"version", pb::schema_version},
                                                      {"q", atlas_q},
                                                      {"n", atlas_n},
                                                      {"entries", rows},
                                                      {"feasible", feasible},
                                                      {"total", entries.size()}}
                                                 .dump(2)
                                          << '\n';
                        }
                        return 0;
                }
                if (*conj2) {
                        auto vectors = pb::parse_vector_list(c2_vectors);
                        auto part = pb::conjecture2_search(c2_n, c2_d, vectors);
                        std::cout << pb::conjecture2_json(c2_n, c2_d, vectors, part).dump(2) << '\n';
                        return 0;
                }
                if (*conj3) {
                        pb::json doc;
                        try {
                                doc = pb::json::parse(read_file(c3_graph));
                        } catch (const pb::json::exception& e) {
                                throw pb::error(pb::errc::parse_error, e.what());
                        }
                        auto g = pb::colored_graph_from_json(doc);
                        auto m = pb::conjecture3_search(g);
                        std::cout << pb::conjecture3_json(g, m).dump(2) << '\n';
                        return 0;
                }
                if (*serve) {
                        auto [host, port] = pb::service::resolve_bind(bind_arg);
                        pb::service::session_store store;
                        httplib::Server server;
                        pb::service::mount(server, store);
                        running_server = &server;
                        std::signal(SIGINT, stop_server);
                        std::signal(SIGTERM, stop_server);
                        std::cerr << "listening on " << host << ':' << port << '\n';
                        if (!server.listen(host, port)) {
                                std::cerr << "error: cannot bind " << host << ':' << port << '\n';
                                return 1;
                        }
                        running_server = nullptr;
                        if (!snapshot_path.empty()) {
                                std::ofstream out(snapshot_path);
                                out << store.snapshot().dump(2) << '\n';
                        }
                        return 0;
                }
        } catch (const pb::error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 1;
        }
        return 0;
}
