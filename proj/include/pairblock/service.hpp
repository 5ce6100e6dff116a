#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "httplib.h"

#include "pairblock/engine.hpp"
#include "pairblock/error.hpp"
#include "pairblock/pairing.hpp"
#include "pairblock/serialization.hpp"

namespace pairblock::service {

/// Largest board side accepted over HTTP.
inline constexpr coord_t max_api_side = 64;

struct response {
        int status = 200;
        json body;
};

inline response
error_response(int status, std::string code, std::string message)
{
        return {status, {{"version", schema_version}, {"code", std::move(code)},
                         {"message", std::move(message)}}};
}

struct session {
        pairing_certificate cert;
        game_state state;
        std::mutex mu;
};

/// In-memory sessions. The map is guarded by a shared mutex; each session
/// carries its own mutex so moves on one game are serialized without a
/// global lock.
class session_store {
public:
        explicit session_store(std::uint64_t id_seed = std::random_device{}())
            : id_rng_(id_seed)
        {
        }

        /// POST /games
        response create(const json& body)
        {
                coord_t side = 0;
                std::uint64_t seed = 0;
                std::vector<point> vectors;
                try {
                        side = body.at("N").get<coord_t>();
                        seed = body.value("seed", std::uint64_t(0));
                        const auto& dirs = body.at("directions");
                        if (dirs.is_string())
                                vectors = parse_vector_list(dirs.get<std::string>());
                        else
                                vectors = dirs.get<std::vector<point>>();
                } catch (const json::exception& e) {
                        return error_response(400, "bad_request", e.what());
                } catch (const error& e) {
                        return error_response(400, std::string(to_string(e.code())), e.what());
                }
                if (side < 1 || side > max_api_side)
                        return error_response(400, "bad_request",
                                              "N must be in 1.." + std::to_string(max_api_side));
                for (const auto& v : vectors)
                        if (v.size() != 2)
                                return error_response(400, "bad_request",
                                                      "directions must be 2-dimensional");
                auto s = std::make_shared<session>();
                try {
                        s->cert = build_certificate(side, 2, vectors, seed);
                } catch (const error& e) {
                        return error_response(400, std::string(to_string(e.code())), e.what());
                }
                s->state = game_state(s->cert.spec().board);
                std::string id;
                {
                        std::unique_lock lock(map_mu_);
                        do {
                                id = next_id();
                        } while (sessions_.count(id));
                        sessions_.emplace(id, s);
                }
                return {200, {{"version", schema_version},
                              {"session", id},
                              {"p", s->cert.spec().p},
                              {"m", s->cert.spec().m},
                              {"N", side},
                              {"directions", directions_json(s->cert)}}};
        }

        /// GET /games/{id}: full state with every cell's partner.
        response get(const std::string& id) const
        {
                auto s = find(id);
                if (!s)
                        return not_found(id);
                std::lock_guard lock(s->mu);
                return {200, state_json(id, *s)};
        }

        /// POST /games/{id}/move: Maker's move and Breaker's synchronous reply.
        response move(const std::string& id, const json& body)
        {
                auto s = find(id);
                if (!s)
                        return not_found(id);
                point cell;
                try {
                        cell = body.at("point").get<point>();
                } catch (const json::exception& e) {
                        return error_response(400, "bad_request", e.what());
                }
                std::lock_guard lock(s->mu);
                auto& state = s->state;
                const auto& spec = s->cert.spec();
                if (!state.board().contains(cell))
                        return error_response(400, "bad_request",
                                              "point " + to_string(cell) + " is not a board cell");
                if (state.status() != game_status::in_progress)
                        return error_response(409, "game_over", "game is already finished");
                if (state.to_move() != player::maker)
                        return error_response(409, "not_your_turn", "it is not Maker's turn");
                if (state.at(cell) != player::empty)
                        return error_response(409, "cell_occupied",
                                              "cell " + to_string(cell) + " is occupied");
                state.place(cell, player::maker);
                json out = {{"version", schema_version},
                            {"maker", {{"point", point_json(cell)}}},
                            {"breaker", nullptr}};
                if (auto win = detect_maker_win(state, cell, spec)) {
                        state.finish(game_status::maker_win, std::move(win));
                } else if (state.full()) {
                        state.finish(game_status::draw);
                } else {
                        auto reply = breaker_move(state, s->cert);
                        state.place(reply.cell, player::breaker, reply.rule);
                        out["breaker"] = {{"point", point_json(reply.cell)},
                                          {"rule", to_string(reply.rule)}};
                        if (state.full())
                                state.finish(game_status::draw);
                }
                out["status"] = to_string(state.status());
                if (state.status() != game_status::in_progress)
                        out["strong_draw_audit"] = strong_draw_holds(state, spec);
                return {200, std::move(out)};
        }

        /// DELETE /games/{id}
        response remove(const std::string& id)
        {
                std::unique_lock lock(map_mu_);
                if (!sessions_.erase(id))
                        return not_found(id);
                return {200, {{"version", schema_version}, {"deleted", id}}};
        }

        std::size_t size() const
        {
                std::shared_lock lock(map_mu_);
                return sessions_.size();
        }

        /// Every session's certificate and move history.
        json snapshot() const
        {
                std::shared_lock lock(map_mu_);
                json games = json::object();
                for (const auto& [id, s] : sessions_) {
                        std::lock_guard slock(s->mu);
                        json moves = json::array();
                        for (const auto& mv : s->state.history())
                                moves.push_back({{"player", to_string(mv.who)},
                                                 {"point", point_json(mv.cell)}});
                        games[id] = {{"certificate", certificate_to_json(s->cert)},
                                     {"status", to_string(s->state.status())},
                                     {"history", std::move(moves)}};
                }
                return {{"version", schema_version}, {"games", std::move(games)}};
        }

private:
        std::shared_ptr<session> find(const std::string& id) const
        {
                std::shared_lock lock(map_mu_);
                auto it = sessions_.find(id);
                return it == sessions_.end() ? nullptr : it->second;
        }

        static response not_found(const std::string& id)
        {
                return error_response(404, "not_found", "no game '" + id + "'");
        }

        std::string next_id()
        {
                char buf[17];
                std::snprintf(buf, sizeof buf, "%016llx",
                              static_cast<unsigned long long>(id_rng_()));
                return buf;
        }

        static json directions_json(const pairing_certificate& cert)
        {
                json dirs = json::array();
                for (const auto& v : cert.spec().dirs)
                        dirs.push_back(point_json(v.vec()));
                return dirs;
        }

        static json state_json(const std::string& id, const session& s)
        {
                const auto& spec = s.cert.spec();
                const auto& state = s.state;
                json cells = json::array();
                for (std::size_t i = 0; i < spec.board.cell_count(); ++i) {
                        auto w = spec.board.point_at(i);
                        cells.push_back({{"point", point_json(w)},
                                         {"state", to_string(state.at_index(i))},
                                         {"partner", partner_json(partner(w, s.cert))}});
                }
                json history = json::array();
                for (std::size_t k = 0; k < state.history().size(); ++k) {
                        const auto& mv = state.history()[k];
                        json line = {{"ply", k + 1},
                                     {"player", to_string(mv.who)},
                                     {"point", point_json(mv.cell)}};
                        if (mv.rule)
                                line["rule"] = to_string(*mv.rule);
                        history.push_back(std::move(line));
                }
                json out = {{"version", schema_version},
                            {"session", id},
                            {"N", spec.board.side},
                            {"d", spec.board.dim},
                            {"p", spec.p},
                            {"m", spec.m},
                            {"directions", directions_json(s.cert)},
                            {"status", to_string(state.status())},
                            {"to_move", to_string(state.to_move())},
                            {"cells", std::move(cells)},
                            {"history", std::move(history)}};
                if (state.status() != game_status::in_progress)
                        out["strong_draw_audit"] = strong_draw_holds(state, spec);
                if (state.winning_window())
                        out["window"] = window_json(*state.winning_window());
                return out;
        }

        mutable std::shared_mutex map_mu_;
        std::map<std::string, std::shared_ptr<session>> sessions_;
        std::mt19937_64 id_rng_;
};

namespace detail {

inline void
reply(httplib::Response& res, const response& r)
{
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
}

inline std::optional<json>
parse_body(const httplib::Request& req, httplib::Response& res)
{
        try {
                return json::parse(req.body);
        } catch (const json::exception& e) {
                reply(res, error_response(400, "bad_request",
                                          std::string("invalid JSON body: ") + e.what()));
                return std::nullopt;
        }
}

} // namespace detail

/// Registers the game routes on an httplib server.
inline void
mount(httplib::Server& server, session_store& store)
{
        server.Post("/games", [&](const httplib::Request& req, httplib::Response& res) {
                if (auto body = detail::parse_body(req, res))
                        detail::reply(res, store.create(*body));
        });
        server.Get(R"(/games/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
                detail::reply(res, store.get(req.matches[1]));
        });
        server.Post(R"(/games/([^/]+)/move)",
                    [&](const httplib::Request& req, httplib::Response& res) {
                            if (auto body = detail::parse_body(req, res))
                                    detail::reply(res, store.move(req.matches[1], *body));
                    });
        server.Delete(R"(/games/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
                detail::reply(res, store.remove(req.matches[1]));
        });
}

/// host:port from the argument, else PAIRBLOCK_BIND, else 127.0.0.1:8080.
inline std::pair<std::string, int>
resolve_bind(const std::string& arg)
{
        std::string spec = arg;
        if (spec.empty())
                if (const char* env = std::getenv("PAIRBLOCK_BIND"))
                        spec = env;
        if (spec.empty())
                spec = "127.0.0.1:8080";
        auto colon = spec.rfind(':');
        if (colon == std::string::npos)
                throw error(errc::parse_error, "bind address must be host:port");
        int port = 0;
        try {
                port = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
                throw error(errc::parse_error, "bad port in '" + spec + "'");
        }
        return {spec.substr(0, colon), port};
}

} // namespace pairblock::service
