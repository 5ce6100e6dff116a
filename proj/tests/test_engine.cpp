#include <gtest/gtest.h>

#include <sstream>

#include "pairblock/engine.hpp"

using namespace pairblock;

namespace {

const std::vector<point> classic = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

pairing_certificate
line_cert()
{
        return build_certificate(12, 1, {{1}}, 1);
}

game_spec
spec_with_m(std::size_t dim, coord_t side, const std::vector<point>& raw, coord_t m)
{
        return {{side, dim}, canonical_direction_set(raw), 0, m};
}

} // namespace

TEST(BreakerMove, AnswersAtPartner)
{
        auto cert = line_cert();
        game_state state(cert.spec().board);
        state.place({3}, player::maker);
        auto reply = breaker_move(state, cert);
        EXPECT_EQ(reply.cell, (point{4}));
        EXPECT_EQ(reply.rule, breaker_rule::partner);
}

TEST(BreakerMove, FallbackWhenUnmatched)
{
        auto cert = line_cert();
        game_state state(cert.spec().board);
        state.place({2}, player::maker);
        auto reply = breaker_move(state, cert);
        EXPECT_EQ(reply.cell, (point{1}));
        EXPECT_EQ(reply.rule, breaker_rule::fallback);
}

TEST(BreakerMove, FallbackWhenPartnerOccupied)
{
        auto cert = line_cert();
        game_state state(cert.spec().board);
        state.place({2}, player::maker);
        state.place({3}, player::breaker);
        state.place({4}, player::maker);
        auto reply = breaker_move(state, cert);
        EXPECT_EQ(reply.rule, breaker_rule::fallback);
        EXPECT_EQ(reply.cell, (point{1}));
}

TEST(BreakerMove, FallbackWhenPartnerOffBoard)
{
        auto cert = line_cert();
        game_state state(cert.spec().board);
        state.place({12}, player::maker);
        auto reply = breaker_move(state, cert);
        EXPECT_EQ(reply.rule, breaker_rule::fallback);
        EXPECT_EQ(reply.cell, (point{1}));
}

TEST(GameState, RejectsIllegalMoves)
{
        game_state state(board_spec{3, 1});
        EXPECT_THROW(state.place({1}, player::breaker), error);
        state.place({1}, player::maker);
        EXPECT_THROW(state.place({1}, player::breaker), error);
        EXPECT_THROW(state.place({4}, player::breaker), error);
        state.place({2}, player::breaker);
        EXPECT_TRUE(state.replay_consistent());
}

TEST(DetectMakerWin, Examples)
{
        auto spec = spec_with_m(1, 12, {{1}}, 4);
        game_state state(spec.board);
        for (coord_t x : {5, 6, 7})
                state.place({x}, player::maker), state.place({x - 4}, player::breaker);
        state.place({8}, player::maker);
        auto win = detect_maker_win(state, point{8}, spec);
        ASSERT_TRUE(win.has_value());
        EXPECT_EQ(win->start, (point{5}));

        game_state gap(spec.board);
        for (coord_t x : {5, 6})
                gap.place({x}, player::maker), gap.place({x - 4}, player::breaker);
        gap.place({8}, player::maker);
        EXPECT_FALSE(detect_maker_win(gap, point{8}, spec).has_value());

        auto diag = spec_with_m(2, 4, classic, 3);
        game_state board(diag.board);
        board.place({1, 1}, player::maker);
        board.place({1, 4}, player::breaker);
        board.place({2, 2}, player::maker);
        board.place({2, 4}, player::breaker);
        board.place({3, 3}, player::maker);
        auto dwin = detect_maker_win(board, point{3, 3}, diag);
        ASSERT_TRUE(dwin.has_value());
        EXPECT_EQ(dwin->start, (point{1, 1}));
        EXPECT_EQ(dwin->dir.vec(), (point{1, 1}));
}

TEST(DetectMakerWin, AgreesWithFullScan)
{
        // Fill random boards one Maker mark at a time; whenever the board had
        // no win before the mark, the through-last-move check must agree with
        // a full scan afterwards.
        auto spec = spec_with_m(2, 6, classic, 4);
        rng_t rng(17);
        int checks = 0;
        while (checks < 10000) {
                game_state state(spec.board);
                bool had_win = false;
                while (!state.full() && !had_win) {
                        std::vector<std::size_t> empty;
                        for (std::size_t i = 0; i < spec.board.cell_count(); ++i)
                                if (state.at_index(i) == player::empty)
                                        empty.push_back(i);
                        auto cell = spec.board.point_at(empty[uniform_below(rng, empty.size())]);
                        bool maker = state.to_move() == player::maker;
                        state.place(cell, state.to_move());
                        if (!maker)
                                continue;
                        auto fast = detect_maker_win(state, cell, spec);
                        auto slow = full_scan_maker_win(state, spec);
                        EXPECT_EQ(fast.has_value(), slow.has_value());
                        if (fast) {
                                for (coord_t k = 0; k < fast->length; ++k)
                                        EXPECT_EQ(state.at(fast->at(k)), player::maker);
                        }
                        had_win = slow.has_value();
                        ++checks;
                }
        }
}

TEST(PlayGame, LineRandomMakerAlwaysDraws)
{
        auto cert = line_cert();
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
                random_maker maker(seed);
                auto result = play_game(cert, maker, breaker_policy::pairing, [&](const game_state& s) {
                        ASSERT_TRUE(pairing_invariant_holds(s, cert));
                });
                EXPECT_EQ(result.state.status(), game_status::draw);
                EXPECT_TRUE(result.strong_draw_audit);
                EXPECT_TRUE(result.state.replay_consistent());
                EXPECT_TRUE(result.state.full());
        }
}

TEST(PlayGame, ScriptedFullBoardSequencesDraw)
{
        auto cert = build_certificate(6, 2, classic, 3);
        std::vector<point> forward, backward;
        cert.spec().board.for_each_point([&](const point& w) { forward.push_back(w); });
        backward.assign(forward.rbegin(), forward.rend());
        for (const auto& script : {forward, backward}) {
                scripted_maker maker(script);
                auto result = play_game(cert, maker);
                EXPECT_EQ(result.state.status(), game_status::draw);
                EXPECT_TRUE(result.strong_draw_audit);
        }
        // small m on a larger board, scripted along the main diagonal
        auto big = build_certificate(14, 2, {{1, 1}, {1, 0}}, 5);
        std::vector<point> diag;
        for (coord_t k = 1; k <= 14; ++k)
                diag.push_back({k, k});
        scripted_maker maker(diag);
        auto result = play_game(big, maker, breaker_policy::pairing, [&](const game_state& s) {
                ASSERT_TRUE(pairing_invariant_holds(s, big));
        });
        EXPECT_EQ(result.state.status(), game_status::draw);
        EXPECT_TRUE(result.strong_draw_audit);
}

TEST(PlayGame, GreedyMakerBeatsCertificateIgnoringBreaker)
{
        auto cert = line_cert();
        auto stats = simulate_batch(cert, {maker_kind::greedy, {}}, 100, 1,
                                    breaker_policy::smallest_empty);
        EXPECT_GE(stats.maker_wins, 1u);
        auto paired = simulate_batch(cert, {maker_kind::greedy, {}}, 100, 1);
        EXPECT_EQ(paired.maker_wins, 0u);
        EXPECT_EQ(paired.audit_failures, 0u);
}

TEST(SimulateBatch, ZeroGamesAndDeterminism)
{
        auto cert = line_cert();
        EXPECT_EQ(simulate_batch(cert, {}, 0, 5), batch_stats{});
        auto a = simulate_batch(cert, {}, 50, 9);
        auto b = simulate_batch(cert, {}, 50, 9);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.maker_wins, 0u);
        EXPECT_EQ(a.draws, 50u);
}

TEST(Transcript, JsonLines)
{
        auto cert = line_cert();
        scripted_maker maker({{3}, {2}});
        auto result = play_game(cert, maker);
        std::ostringstream os;
        write_transcript(os, result);
        std::istringstream in(os.str());
        std::string line;
        std::vector<json> lines;
        while (std::getline(in, line))
                lines.push_back(json::parse(line));
        ASSERT_EQ(lines.size(), 13u);
        EXPECT_EQ(lines[0]["player"], "maker");
        EXPECT_EQ(lines[0]["point"], json::array({3}));
        EXPECT_EQ(lines[1]["rule"], "partner");
        EXPECT_EQ(lines[1]["point"], json::array({4}));
        EXPECT_EQ(lines[3]["rule"], "fallback");
        EXPECT_EQ(lines.back()["outcome"], "Draw");
        EXPECT_EQ(lines.back()["strong_draw_audit"], true);
}
