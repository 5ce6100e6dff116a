#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "pairblock/embedding.hpp"
#include "pairblock/error.hpp"

namespace pairblock {

struct residue_triple {
        std::int64_t delta = 0;
        std::int64_t x = 0;
        std::int64_t y = 0;

        friend bool operator==(const residue_triple&, const residue_triple&) = default;
};

/// 2n pairwise distinct residues mod q with x_i + delta_i = y_i (mod q).
struct residue_system {
        std::int64_t q = 0;
        std::vector<residue_triple> triples;

        friend bool operator==(const residue_system&, const residue_system&) = default;
};

inline bool
verify_residue_system(const residue_system& sys)
{
        if (sys.q < 2 || 2 * std::int64_t(sys.triples.size()) > sys.q)
                return false;
        std::vector<bool> used(std::size_t(sys.q), false);
        for (const auto& t : sys.triples) {
                if (t.delta < 1 || t.delta >= sys.q)
                        return false;
                for (auto v : {t.x, t.y}) {
                        if (v < 0 || v >= sys.q || used[std::size_t(v)])
                                return false;
                        used[std::size_t(v)] = true;
                }
                if ((t.x + t.delta) % sys.q != t.y)
                        return false;
        }
        return true;
}

namespace detail {

inline void
check_residue_input(std::int64_t q, const std::vector<std::int64_t>& deltas)
{
        if (q < 2)
                throw error(errc::invariant_violation, "modulus must be >= 2");
        for (auto delta : deltas)
                if (delta < 1 || delta >= q)
                        throw error(errc::invariant_violation,
                                    "delta " + std::to_string(delta)
                                        + " is not a nonzero residue mod "
                                        + std::to_string(q));
}

class residue_search {
public:
        residue_search(std::int64_t q, const std::vector<std::int64_t>& deltas)
            : q_(q), deltas_(deltas), used_(std::size_t(q), false),
              failed_(deltas.size())
        {
                sys_.q = q;
        }

        bool run() { return place(0); }
        residue_system take() { return std::move(sys_); }

private:
        // Depth-first in input order, x ascending; memoizes dead used-sets
        // per level so the first (lexicographic) solution is still found.
        bool place(std::size_t i)
        {
                if (i == deltas_.size())
                        return true;
                if (failed_[i].count(used_))
                        return false;
                for (std::int64_t x = 0; x < q_; ++x) {
                        std::int64_t y = (x + deltas_[i]) % q_;
                        if (used_[std::size_t(x)] || used_[std::size_t(y)])
                                continue;
                        used_[std::size_t(x)] = used_[std::size_t(y)] = true;
                        sys_.triples.push_back({deltas_[i], x, y});
                        if (place(i + 1))
                                return true;
                        sys_.triples.pop_back();
                        used_[std::size_t(x)] = used_[std::size_t(y)] = false;
                }
                failed_[i].insert(used_);
                return false;
        }

        std::int64_t q_;
        const std::vector<std::int64_t>& deltas_;
        std::vector<bool> used_;
        std::vector<std::unordered_set<std::vector<bool>>> failed_;
        residue_system sys_;
};

} // namespace detail

/// Lexicographically smallest residue system (directions in input order,
/// x_i ascending), or nullopt when none exists.
inline std::optional<residue_system>
try_solve_residues(std::int64_t q, const std::vector<std::int64_t>& deltas)
{
        detail::check_residue_input(q, deltas);
        if (2 * std::int64_t(deltas.size()) > q)
                return std::nullopt;
        detail::residue_search search(q, deltas);
        if (!search.run())
                return std::nullopt;
        return search.take();
}

/// Throws errc::infeasible when no system exists. For prime q >= 2n+1 a
/// system always exists, so failure there is reported as an invariant
/// violation.
inline residue_system
solve_residues(std::int64_t q, const std::vector<std::int64_t>& deltas)
{
        if (auto sys = try_solve_residues(q, deltas))
                return std::move(*sys);
        if (is_prime(q) && q >= 2 * std::int64_t(deltas.size()) + 1)
                throw error(errc::invariant_violation,
                            "residue search failed for prime modulus "
                                + std::to_string(q) + " >= 2n+1");
        throw error(errc::infeasible, "no residue system exists mod "
                                          + std::to_string(q));
}

/// Exhaustive reference solver: expands the set of every reachable
/// used-residue mask one direction at a time. Independent of the
/// depth-first search above. Limited to q <= 64.
inline std::optional<residue_system>
oracle_solve(std::int64_t q, const std::vector<std::int64_t>& deltas)
{
        detail::check_residue_input(q, deltas);
        if (q > 64)
                throw error(errc::invariant_violation, "oracle limited to q <= 64");
        if (2 * std::int64_t(deltas.size()) > q)
                return std::nullopt;
        using mask_t = std::uint64_t;
        struct step {
                mask_t prev;
                std::int64_t x;
        };
        std::vector<std::map<mask_t, step>> layers(deltas.size() + 1);
        layers[0].emplace(0, step{0, -1});
        for (std::size_t i = 0; i < deltas.size(); ++i) {
                for (const auto& [mask, _] : layers[i]) {
                        for (std::int64_t x = 0; x < q; ++x) {
                                std::int64_t y = (x + deltas[i]) % q;
                                mask_t bits = (mask_t(1) << x) | (mask_t(1) << y);
                                if (x == y || (mask & bits))
                                        continue;
                                layers[i + 1].emplace(mask | bits, step{mask, x});
                        }
                }
                if (layers[i + 1].empty())
                        return std::nullopt;
        }
        residue_system sys{q, std::vector<residue_triple>(deltas.size())};
        mask_t mask = layers.back().begin()->first;
        for (std::size_t i = deltas.size(); i-- > 0;) {
                const auto& s = layers[i + 1].at(mask);
                sys.triples[i] = {deltas[i], s.x, (s.x + deltas[i]) % q};
                mask = s.prev;
        }
        return sys;
}

struct atlas_entry {
        std::vector<std::int64_t> deltas;
        bool feasible = false;
};

/// Oracle feasibility for every delta vector in {1..q-1}^n, in
/// lexicographic order.
inline std::vector<atlas_entry>
feasibility_atlas(std::int64_t q, std::size_t n)
{
        std::vector<atlas_entry> out;
        if (q < 2)
                return out;
        std::vector<std::int64_t> deltas(n, 1);
        for (;;) {
                out.push_back({deltas, oracle_solve(q, deltas).has_value()});
                std::size_t i = n;
                while (i-- > 0) {
                        if (deltas[i] < q - 1) {
                                ++deltas[i];
                                break;
                        }
                        deltas[i] = 1;
                }
                if (i == std::size_t(-1))
                        return out;
        }
}

inline void
write_atlas_csv(std::ostream& os, const std::vector<atlas_entry>& atlas,
                std::size_t n)
{
        for (std::size_t i = 0; i < n; ++i)
                os << "delta_" << i + 1 << ',';
        os << "feasible\n";
        for (const auto& e : atlas) {
                for (auto delta : e.deltas)
                        os << delta << ',';
                os << (e.feasible ? 1 : 0) << '\n';
        }
}

} // namespace pairblock
