#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "pairblock/embedding.hpp"
#include "pairblock/error.hpp"
#include "pairblock/lattice.hpp"
#include "pairblock/residue.hpp"

namespace pairblock {

/// Board, winning directions, prime and winning length m = p+1.
struct game_spec {
        board_spec board;
        std::vector<direction> dirs;
        std::int64_t p = 0;
        std::int64_t m = 0;

        std::size_t n() const noexcept { return dirs.size(); }
};

/// Everything needed to recompute any cell's partner.
class pairing_certificate {
public:
        pairing_certificate() = default;

        /// Assembles and validates; throws invariant_violation on any
        /// inconsistency between the parts.
        pairing_certificate(game_spec spec, embedding_data emb, residue_system res)
            : spec_(std::move(spec)), emb_(std::move(emb)), res_(std::move(res))
        {
                validate();
                role_.assign(std::size_t(spec_.p), no_role);
                for (std::size_t i = 0; i < res_.triples.size(); ++i) {
                        role_[std::size_t(res_.triples[i].x)] = int(i) + 1;
                        role_[std::size_t(res_.triples[i].y)] = -(int(i) + 1);
                }
        }

        const game_spec& spec() const noexcept { return spec_; }
        const embedding_data& embedding() const noexcept { return emb_; }
        const residue_system& residues() const noexcept { return res_; }

        /// +(i+1) if residue is x_i, -(i+1) if it is y_i, 0 otherwise.
        int role_of_residue(std::int64_t residue) const
        {
                return role_[std::size_t(residue)];
        }

private:
        static constexpr int no_role = 0;

        void validate() const
        {
                auto fail = [](const std::string& what) {
                        throw error(errc::invariant_violation, "certificate: " + what);
                };
                if (spec_.dirs.empty())
                        fail("no directions");
                if (spec_.board.side < 1 || spec_.board.dim < 1)
                        fail("empty board");
                for (const auto& v : spec_.dirs) {
                        if (v.dim() != spec_.board.dim)
                                fail("direction dimension differs from board");
                        if (gcd_vector(v.vec()) != 1)
                                fail("direction not primitive");
                }
                for (std::size_t i = 0; i < spec_.dirs.size(); ++i)
                        for (std::size_t k = i + 1; k < spec_.dirs.size(); ++k)
                                if (spec_.dirs[i] == spec_.dirs[k])
                                        fail("duplicate direction");
                if (!is_prime(spec_.p))
                        fail("p is not prime");
                if (spec_.p < 2 * std::int64_t(spec_.n()) + 1)
                        fail("p < 2n+1");
                if (spec_.m != spec_.p + 1)
                        fail("m != p+1");
                if (emb_.u_prime.size() != spec_.board.dim)
                        fail("u' dimension differs from board");
                if (!avoids_all(emb_.u_prime, spec_.dirs, spec_.p))
                        fail("u' . v is divisible by p for some direction");
                check_embedding(emb_, spec_.board.side, spec_.p, spec_.dirs);
                if (res_.q != spec_.p)
                        fail("residue modulus differs from p");
                if (res_.triples.size() != spec_.n())
                        fail("residue triple count differs from n");
                if (!verify_residue_system(res_))
                        fail("residue system invalid");
                for (std::size_t i = 0; i < spec_.n(); ++i)
                        if (res_.triples[i].delta != emb_.offsets[i].magnitude % spec_.p)
                                fail("delta_" + std::to_string(i + 1) + " != d_i mod p");
        }

        game_spec spec_;
        embedding_data emb_;
        residue_system res_;
        std::vector<int> role_;
};

/// Runs the full construction: prime, u', r, offsets, residue system.
inline pairing_certificate
build_certificate(coord_t side, std::size_t dim, const std::vector<point>& vectors,
                  std::uint64_t seed, std::optional<std::int64_t> p_override = {})
{
        if (side < 1)
                throw error(errc::invariant_violation, "board side must be >= 1");
        auto dirs = canonical_direction_set(vectors);
        if (dirs.empty())
                throw error(errc::invariant_violation, "no directions given");
        if (dirs.front().dim() != dim)
                throw error(errc::dimension_mismatch,
                            "directions have dimension "
                                + std::to_string(dirs.front().dim()) + ", board has "
                                + std::to_string(dim));
        auto ctx = prime_context::for_directions(dirs.size(), p_override);
        auto u = find_u(ctx.p, dirs, seed);
        auto emb = make_embedding(std::move(u.u_prime), ctx.p, side, dirs);
        std::vector<std::int64_t> deltas;
        for (const auto& off : emb.offsets)
                deltas.push_back(std::int64_t(off.magnitude % ctx.p));
        auto res = solve_residues(ctx.p, deltas);
        game_spec spec{{side, dim}, std::move(dirs), ctx.p, ctx.m};
        return pairing_certificate(std::move(spec), std::move(emb), std::move(res));
}

/// (point . r) mod p, computed from u' alone.
inline std::int64_t
residue_of(std::span<const coord_t> w, const pairing_certificate& cert)
{
        return dot_mod(w, cert.embedding().u_prime, cert.spec().p);
}

struct partner_result {
        enum class kind { matched, matched_off_board, unmatched };

        kind status = kind::unmatched;
        point partner;               ///< set only when matched
        std::size_t dir_index = 0;   ///< meaningless when unmatched

        bool is_matched() const noexcept { return status == kind::matched; }

        friend bool operator==(const partner_result&, const partner_result&) = default;
};

inline partner_result
partner(std::span<const coord_t> w, const pairing_certificate& cert)
{
        int role = cert.role_of_residue(residue_of(w, cert));
        if (role == 0)
                return {};
        std::size_t i = std::size_t(std::abs(role)) - 1;
        const auto& v = cert.spec().dirs[i];
        // x_i steps +d_i on the integer line, i.e. +s_i v_i on the grid
        coord_t step = role > 0 ? cert.embedding().offsets[i].sign
                                : -cert.embedding().offsets[i].sign;
        point q(w.begin(), w.end());
        for (std::size_t j = 0; j < q.size(); ++j) {
                auto moved = detail::checked_add(q[j], step * v[j]);
                if (!moved)
                        return {partner_result::kind::matched_off_board, {}, i};
                q[j] = *moved;
        }
        if (!cert.spec().board.contains(q))
                return {partner_result::kind::matched_off_board, {}, i};
        return {partner_result::kind::matched, std::move(q), i};
}

/// True when two points of the window are partners of each other.
inline bool
window_has_pair(const window& win, const pairing_certificate& cert)
{
        auto pts = win.points();
        for (const auto& w : pts) {
                auto res = partner(w, cert);
                if (!res.is_matched())
                        continue;
                for (const auto& other : pts)
                        if (other == res.partner)
                                return true;
        }
        return false;
}

struct blocking_report {
        bool blocked = true;
        std::int64_t m = 0;
        std::uint64_t windows_checked = 0;
        std::vector<std::uint64_t> per_direction_counts;
        std::optional<window> counterexample;
};

/// Checks every window of length m (default: the certificate's m) along
/// every direction; the first unblocked window in enumeration order is
/// reported.
inline blocking_report
verify_blocking(const pairing_certificate& cert,
                std::optional<std::int64_t> m_override = {})
{
        blocking_report rep;
        rep.m = m_override.value_or(cert.spec().m);
        for (const auto& dir : cert.spec().dirs) {
                std::uint64_t count = 0;
                for_each_window(cert.spec().board, dir, rep.m, [&](const window& win) {
                        ++count;
                        if (!rep.counterexample && !window_has_pair(win, cert)) {
                                rep.blocked = false;
                                rep.counterexample = win;
                        }
                });
                rep.per_direction_counts.push_back(count);
                rep.windows_checked += count;
        }
        return rep;
}

} // namespace pairblock
