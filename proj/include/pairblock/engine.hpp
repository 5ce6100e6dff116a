#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pairblock/error.hpp"
#include "pairblock/pairing.hpp"
#include "pairblock/random.hpp"
#include "pairblock/serialization.hpp"

namespace pairblock {

enum class player : std::uint8_t { empty, maker, breaker };
enum class game_status { in_progress, maker_win, draw };
enum class breaker_rule { partner, fallback };
enum class breaker_policy { pairing, smallest_empty };

constexpr std::string_view
to_string(player who)
{
        switch (who) {
        case player::maker: return "maker";
        case player::breaker: return "breaker";
        case player::empty: break;
        }
        return "empty";
}

constexpr std::string_view
to_string(game_status status)
{
        switch (status) {
        case game_status::maker_win: return "MakerWin";
        case game_status::draw: return "Draw";
        case game_status::in_progress: break;
        }
        return "InProgress";
}

constexpr std::string_view
to_string(breaker_rule rule)
{
        return rule == breaker_rule::partner ? "partner" : "fallback";
}

struct move_record {
        point cell;
        player who = player::empty;
        std::optional<breaker_rule> rule; ///< breaker moves only
};

/// Board occupancy plus move history. Maker moves first and the players
/// alternate; every mutation goes through place().
class game_state {
public:
        game_state() = default;
        explicit game_state(board_spec board)
            : board_(board), cells_(board.cell_count(), player::empty)
        {
        }

        const board_spec& board() const noexcept { return board_; }
        const std::vector<move_record>& history() const noexcept { return history_; }
        game_status status() const noexcept { return status_; }
        const std::optional<window>& winning_window() const noexcept { return win_; }

        player at(std::span<const coord_t> w) const { return cells_[board_.index_of(w)]; }
        player at_index(std::size_t idx) const { return cells_[idx]; }

        player to_move() const noexcept
        {
                return history_.size() % 2 == 0 ? player::maker : player::breaker;
        }

        bool full() const noexcept { return history_.size() == cells_.size(); }

        std::optional<point> smallest_empty() const
        {
                for (std::size_t i = 0; i < cells_.size(); ++i)
                        if (cells_[i] == player::empty)
                                return board_.point_at(i);
                return std::nullopt;
        }

        void place(const point& w, player who, std::optional<breaker_rule> rule = {})
        {
                if (status_ != game_status::in_progress)
                        throw error(errc::illegal_move, "game is over");
                if (who != to_move())
                        throw error(errc::illegal_move,
                                    std::string("not ") + std::string(to_string(who))
                                        + "'s turn");
                if (!board_.contains(w))
                        throw error(errc::illegal_move, "cell " + to_string(w) + " is off the board");
                auto& cell = cells_[board_.index_of(w)];
                if (cell != player::empty)
                        throw error(errc::illegal_move, "cell " + to_string(w) + " is occupied");
                cell = who;
                history_.push_back({w, who, rule});
        }

        void finish(game_status status, std::optional<window> win = {})
        {
                status_ = status;
                win_ = std::move(win);
        }

        /// Replays the history onto an empty board and compares occupancy.
        bool replay_consistent() const
        {
                std::vector<player> cells(cells_.size(), player::empty);
                for (std::size_t k = 0; k < history_.size(); ++k) {
                        const auto& mv = history_[k];
                        player expected = k % 2 == 0 ? player::maker : player::breaker;
                        if (mv.who != expected || !board_.contains(mv.cell))
                                return false;
                        auto& cell = cells[board_.index_of(mv.cell)];
                        if (cell != player::empty)
                                return false;
                        cell = mv.who;
                }
                return cells == cells_;
        }

private:
        board_spec board_;
        std::vector<player> cells_;
        std::vector<move_record> history_;
        game_status status_ = game_status::in_progress;
        std::optional<window> win_;
};

namespace detail {

/// Consecutive Maker cells from w (exclusive) stepping by sign*v.
inline coord_t
maker_run(const game_state& state, std::span<const coord_t> w, const direction& v,
          coord_t sign, coord_t limit)
{
        coord_t run = 0;
        point q(w.begin(), w.end());
        while (run < limit) {
                for (std::size_t j = 0; j < q.size(); ++j)
                        q[j] += sign * v[j];
                if (!state.board().contains(q) || state.at(q) != player::maker)
                        break;
                ++run;
        }
        return run;
}

} // namespace detail

/// A window of m Maker cells through last_move, if any. Only lines through
/// the newest mark need checking.
inline std::optional<window>
detect_maker_win(const game_state& state, std::span<const coord_t> last_move,
                 const game_spec& spec)
{
        for (const auto& v : spec.dirs) {
                coord_t back = detail::maker_run(state, last_move, v, -1, spec.m - 1);
                coord_t fwd = detail::maker_run(state, last_move, v, +1, spec.m - 1);
                if (back + fwd + 1 >= spec.m) {
                        window win{point(last_move.begin(), last_move.end()), v, spec.m};
                        for (std::size_t j = 0; j < win.start.size(); ++j)
                                win.start[j] -= back * v[j];
                        return win;
                }
        }
        return std::nullopt;
}

/// Scans every window on the board for one fully held by Maker.
inline std::optional<window>
full_scan_maker_win(const game_state& state, const game_spec& spec)
{
        std::optional<window> found;
        for (const auto& v : spec.dirs) {
                for_each_window(state.board(), v, spec.m, [&](const window& win) {
                        if (found)
                                return;
                        for (coord_t k = 0; k < win.length; ++k)
                                if (state.at(win.at(k)) != player::maker)
                                        return;
                        found = win;
                });
                if (found)
                        break;
        }
        return found;
}

/// Strong-draw audit: no winning window is entirely Maker's.
inline bool
strong_draw_holds(const game_state& state, const game_spec& spec)
{
        return !full_scan_maker_win(state, spec).has_value();
}

/// No matched pair has both cells occupied by Maker.
inline bool
pairing_invariant_holds(const game_state& state, const pairing_certificate& cert)
{
        for (std::size_t i = 0; i < state.board().cell_count(); ++i) {
                if (state.at_index(i) != player::maker)
                        continue;
                auto res = partner(state.board().point_at(i), cert);
                if (res.is_matched() && state.at(res.partner) == player::maker)
                        return false;
        }
        return true;
}

struct breaker_reply {
        point cell;
        breaker_rule rule = breaker_rule::fallback;
};

/// Answers Maker's last move at its partner when that cell is on the board
/// and empty; otherwise takes the smallest empty cell.
inline breaker_reply
breaker_move(const game_state& state, const pairing_certificate& cert,
             breaker_policy policy = breaker_policy::pairing)
{
        if (state.to_move() != player::breaker)
                throw error(errc::illegal_move, "not Breaker's turn");
        if (policy == breaker_policy::pairing) {
                auto res = partner(state.history().back().cell, cert);
                if (res.is_matched() && state.at(res.partner) == player::empty)
                        return {std::move(res.partner), breaker_rule::partner};
        }
        auto cell = state.smallest_empty();
        if (!cell)
                throw error(errc::illegal_move, "board is full");
        return {std::move(*cell), breaker_rule::fallback};
}

class maker_strategy {
public:
        virtual ~maker_strategy() = default;
        virtual std::string name() const = 0;
        /// Returns an empty cell; the board must not be full.
        virtual point next_move(const game_state& state, const game_spec& spec) = 0;
};

class random_maker final : public maker_strategy {
public:
        explicit random_maker(std::uint64_t seed) : rng_(seed) {}

        std::string name() const override { return "random"; }

        point next_move(const game_state& state, const game_spec&) override
        {
                std::vector<std::size_t> empty;
                for (std::size_t i = 0; i < state.board().cell_count(); ++i)
                        if (state.at_index(i) == player::empty)
                                empty.push_back(i);
                if (empty.empty())
                        throw error(errc::illegal_move, "board is full");
                return state.board().point_at(empty[uniform_below(rng_, empty.size())]);
        }

private:
        rng_t rng_;
};

/// Opens on a seeded random cell, then maximizes the longest own run
/// through the chosen cell; ties go to the lexicographically smallest.
class greedy_maker final : public maker_strategy {
public:
        explicit greedy_maker(std::uint64_t seed) : opener_(seed) {}

        std::string name() const override { return "greedy"; }

        point next_move(const game_state& state, const game_spec& spec) override
        {
                if (state.history().empty())
                        return opener_.next_move(state, spec);
                const auto cells = state.board().cell_count();
                std::optional<std::size_t> best;
                coord_t best_score = -1;
                for (std::size_t i = 0; i < cells; ++i) {
                        if (state.at_index(i) != player::empty)
                                continue;
                        auto w = state.board().point_at(i);
                        coord_t score = 0;
                        for (const auto& v : spec.dirs) {
                                coord_t run = 1 + detail::maker_run(state, w, v, -1, spec.m)
                                            + detail::maker_run(state, w, v, +1, spec.m);
                                score = std::max(score, run);
                        }
                        if (score > best_score) {
                                best_score = score;
                                best = i;
                        }
                }
                if (!best)
                        throw error(errc::illegal_move, "board is full");
                return state.board().point_at(*best);
        }

private:
        random_maker opener_;
};

/// Plays the listed cells in order, skipping occupied ones, then falls
/// back to the smallest empty cell.
class scripted_maker final : public maker_strategy {
public:
        explicit scripted_maker(std::vector<point> moves) : moves_(std::move(moves)) {}

        std::string name() const override { return "scripted"; }

        point next_move(const game_state& state, const game_spec&) override
        {
                while (next_ < moves_.size()) {
                        const auto& w = moves_[next_++];
                        if (state.board().contains(w) && state.at(w) == player::empty)
                                return w;
                }
                auto cell = state.smallest_empty();
                if (!cell)
                        throw error(errc::illegal_move, "board is full");
                return *cell;
        }

private:
        std::vector<point> moves_;
        std::size_t next_ = 0;
};

enum class maker_kind { random, greedy, scripted };

struct maker_config {
        maker_kind kind = maker_kind::random;
        std::vector<point> script;
};

inline maker_kind
parse_maker_kind(std::string_view name)
{
        if (name == "random")
                return maker_kind::random;
        if (name == "greedy")
                return maker_kind::greedy;
        if (name == "scripted")
                return maker_kind::scripted;
        throw error(errc::parse_error, "unknown maker strategy '" + std::string(name) + "'");
}

inline std::unique_ptr<maker_strategy>
make_maker(const maker_config& config, std::uint64_t seed)
{
        switch (config.kind) {
        case maker_kind::greedy: return std::make_unique<greedy_maker>(seed);
        case maker_kind::scripted: return std::make_unique<scripted_maker>(config.script);
        case maker_kind::random: break;
        }
        return std::make_unique<random_maker>(seed);
}

struct game_result {
        game_state state;
        bool strong_draw_audit = false;
        std::size_t fallback_moves = 0;
};

/// Hook invoked after every ply, e.g. to assert invariants in tests.
using ply_observer = std::function<void(const game_state&)>;

/// Plays until Maker completes a window or the board fills up.
inline game_result
play_game(const pairing_certificate& cert, maker_strategy& maker,
          breaker_policy policy = breaker_policy::pairing,
          const ply_observer& observe = {})
{
        const auto& spec = cert.spec();
        game_result result{game_state(spec.board)};
        auto& state = result.state;
        for (;;) {
                auto cell = maker.next_move(state, spec);
                state.place(cell, player::maker);
                if (observe)
                        observe(state);
                if (auto win = detect_maker_win(state, cell, spec)) {
                        state.finish(game_status::maker_win, std::move(win));
                        break;
                }
                if (state.full()) {
                        state.finish(game_status::draw);
                        break;
                }
                auto reply = breaker_move(state, cert, policy);
                if (reply.rule == breaker_rule::fallback)
                        ++result.fallback_moves;
                state.place(reply.cell, player::breaker, reply.rule);
                if (observe)
                        observe(state);
                if (state.full()) {
                        state.finish(game_status::draw);
                        break;
                }
        }
        result.strong_draw_audit = strong_draw_holds(state, spec);
        return result;
}

struct batch_stats {
        std::uint64_t games = 0;
        std::uint64_t draws = 0;
        std::uint64_t maker_wins = 0;
        std::uint64_t audit_failures = 0;
        double mean_fallback_moves = 0.0;

        friend bool operator==(const batch_stats&, const batch_stats&) = default;
};

/// Game g uses the Maker seed derive_seed(seed, g), so results do not
/// depend on evaluation order.
inline batch_stats
simulate_batch(const pairing_certificate& cert, const maker_config& maker,
               std::uint64_t games, std::uint64_t seed,
               breaker_policy policy = breaker_policy::pairing)
{
        batch_stats stats;
        std::uint64_t fallback_total = 0;
        for (std::uint64_t g = 0; g < games; ++g) {
                auto strategy = make_maker(maker, derive_seed(seed, g));
                auto result = play_game(cert, *strategy, policy);
                ++stats.games;
                if (result.state.status() == game_status::maker_win)
                        ++stats.maker_wins;
                else
                        ++stats.draws;
                if (!result.strong_draw_audit)
                        ++stats.audit_failures;
                fallback_total += result.fallback_moves;
        }
        if (games > 0)
                stats.mean_fallback_moves = double(fallback_total) / double(games);
        return stats;
}

inline json
batch_stats_json(const batch_stats& stats)
{
        return {{"version", schema_version},
                {"games", stats.games},
                {"draws", stats.draws},
                {"maker_wins", stats.maker_wins},
                {"audit_failures", stats.audit_failures},
                {"mean_fallback_moves", stats.mean_fallback_moves}};
}

/// One JSON object per line: every move, then the outcome.
inline void
write_transcript(std::ostream& os, const game_result& result)
{
        const auto& history = result.state.history();
        for (std::size_t k = 0; k < history.size(); ++k) {
                json line = {{"ply", k + 1},
                             {"player", to_string(history[k].who)},
                             {"point", point_json(history[k].cell)}};
                if (history[k].rule)
                        line["rule"] = to_string(*history[k].rule);
                os << line.dump() << '\n';
        }
        json last = {{"version", schema_version},
                     {"outcome", to_string(result.state.status())},
                     {"strong_draw_audit", result.strong_draw_audit},
                     {"fallback_moves", result.fallback_moves}};
        if (result.state.winning_window())
                last["window"] = window_json(*result.state.winning_window());
        os << last.dump() << '\n';
}

} // namespace pairblock
