#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pairblock/error.hpp"
#include "pairblock/lattice.hpp"
#include "pairblock/random.hpp"

namespace pairblock {

using bigint = boost::multiprecision::cpp_int;

inline bool
is_prime(std::int64_t k)
{
        if (k < 2)
                return false;
        for (std::int64_t f = 2; f <= k / f; ++f)
                if (k % f == 0)
                        return false;
        return true;
}

/// Smallest prime >= k, by trial division.
inline std::int64_t
next_prime_at_least(std::int64_t k)
{
        if (k < 2)
                k = 2;
        while (!is_prime(k))
                ++k;
        return k;
}

/// Nonnegative representative of x mod p.
inline std::int64_t
mod_floor(std::int64_t x, std::int64_t p)
{
        auto r = x % p;
        return r < 0 ? r + p : r;
}

/// (u . v) mod p computed in small integers.
inline std::int64_t
dot_mod(std::span<const coord_t> u, std::span<const coord_t> v, std::int64_t p)
{
        __int128 acc = 0;
        for (std::size_t j = 0; j < u.size(); ++j)
                acc = (acc + __int128(mod_floor(u[j], p)) * mod_floor(v[j], p)) % p;
        return std::int64_t(acc);
}

/// Prime p >= 2n+1 with winning length m = p+1.
struct prime_context {
        std::size_t n = 0;
        std::int64_t p = 0;
        std::int64_t m = 0;

        /// Smallest admissible prime, or an explicit upward override.
        static prime_context
        for_directions(std::size_t n, std::optional<std::int64_t> p_override = {})
        {
                std::int64_t floor = 2 * std::int64_t(n) + 1;
                std::int64_t p = next_prime_at_least(floor);
                if (p_override) {
                        if (!is_prime(*p_override))
                                throw error(errc::invariant_violation,
                                            "p override " + std::to_string(*p_override)
                                                + " is not prime");
                        if (*p_override < floor)
                                throw error(errc::invariant_violation,
                                            "p override " + std::to_string(*p_override)
                                                + " is below 2n+1 = "
                                                + std::to_string(floor));
                        p = *p_override;
                }
                return {n, p, p + 1};
        }
};

struct find_u_result {
        point u_prime;
        int samples = 0;        ///< random draws consumed (<= 64)
        bool from_scan = false; ///< true when the lexicographic fallback ran
};

inline bool
avoids_all(std::span<const coord_t> u, const std::vector<direction>& dirs,
           std::int64_t p)
{
        for (const auto& v : dirs)
                if (dot_mod(u, v.vec(), p) == 0)
                        return false;
        return true;
}

/// First u' in {1..p}^d, in lexicographic order, avoiding every direction.
inline point
scan_for_u(std::int64_t p, const std::vector<direction>& dirs)
{
        point u(dirs.front().dim(), 1);
        for (;;) {
                if (avoids_all(u, dirs, p))
                        return u;
                std::size_t j = u.size();
                while (j-- > 0) {
                        if (u[j] < p) {
                                ++u[j];
                                break;
                        }
                        u[j] = 1;
                }
                if (j == std::size_t(-1))
                        throw error(errc::infeasible,
                                    "no u' in [p]^d avoids every direction");
        }
}

/// Finds u' in {1..p}^d with u'.v_i != 0 (mod p) for every direction.
/// Draws up to 64 uniform samples, then falls back to scan_for_u.
inline find_u_result
find_u(std::int64_t p, const std::vector<direction>& dirs, std::uint64_t seed)
{
        if (dirs.empty())
                throw error(errc::invariant_violation, "no directions");
        // each direction kills at most a 1/p fraction of [p]^d
        if (std::int64_t(dirs.size()) >= p)
                throw error(errc::invariant_violation,
                            "need p > n for the union bound");
        rng_t rng(seed);
        find_u_result out;
        out.u_prime.assign(dirs.front().dim(), 1);
        for (out.samples = 1; out.samples <= 64; ++out.samples) {
                for (auto& x : out.u_prime)
                        x = 1 + coord_t(uniform_below(rng, std::uint64_t(p)));
                if (avoids_all(out.u_prime, dirs, p))
                        return out;
        }
        out.samples = 64;
        out.from_scan = true;
        out.u_prime = scan_for_u(p, dirs);
        return out;
}

/// Base of the weight vector for side length N.
inline coord_t
embedding_base(coord_t side)
{
        return std::max<coord_t>(2 * side + 2, 2);
}

/// r_j = u'_j + p * B^(j-1) with B = max(2N+2, 2). Keeps r_j = u'_j (mod p)
/// for every j and r_{j+1} > N (r_1 + ... + r_j).
inline std::vector<bigint>
build_r(std::span<const coord_t> u_prime, std::int64_t p, coord_t side)
{
        const bigint base = embedding_base(side);
        std::vector<bigint> r;
        bigint power = 1;
        for (coord_t u : u_prime) {
                r.push_back(bigint(u) + bigint(p) * power);
                power *= base;
        }
        return r;
}

/// point . r, exact.
inline bigint
embed(std::span<const coord_t> w, const std::vector<bigint>& r)
{
        bigint acc = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
                acc += bigint(w[j]) * r[j];
        return acc;
}

/// d_i = |r . v_i| and s_i = sign(r . v_i).
struct direction_offset {
        bigint magnitude;
        int sign = 1;
};

inline std::vector<direction_offset>
direction_offsets(const std::vector<bigint>& r, const std::vector<direction>& dirs,
                  std::int64_t p)
{
        std::vector<direction_offset> out;
        for (const auto& v : dirs) {
                bigint dot = embed(v.vec(), r);
                direction_offset off;
                off.sign = dot < 0 ? -1 : 1;
                off.magnitude = abs(dot);
                if (off.magnitude == 0 || off.magnitude % p == 0)
                        throw error(errc::invariant_violation,
                                    "offset for direction " + to_string(v.vec())
                                        + " is divisible by p");
                out.push_back(std::move(off));
        }
        return out;
}

struct embedding_data {
        point u_prime;
        coord_t base = 0;
        std::vector<bigint> r;
        std::vector<direction_offset> offsets;
};

/// Throws invariant_violation unless every embedding property holds.
inline void
check_embedding(const embedding_data& emb, coord_t side, std::int64_t p,
                const std::vector<direction>& dirs)
{
        auto fail = [](const std::string& what) {
                throw error(errc::invariant_violation, "embedding: " + what);
        };
        if (emb.u_prime.size() != emb.r.size())
                fail("u' and r differ in length");
        if (emb.base != embedding_base(side))
                fail("base does not match board side");
        for (coord_t u : emb.u_prime)
                if (u < 1 || u > p)
                        fail("u' entry outside {1..p}");
        bigint prefix = 0;
        for (std::size_t j = 0; j < emb.r.size(); ++j) {
                if (emb.r[j] <= 0)
                        fail("r not positive");
                if (emb.r[j] % p != emb.u_prime[j] % p)
                        fail("r not congruent to u' mod p");
                if (emb.r[j] <= bigint(side) * prefix)
                        fail("chain inequality r_{j+1} > N(r_1+...+r_j) fails");
                prefix += emb.r[j];
        }
        if (emb.offsets.size() != dirs.size())
                fail("offset count differs from direction count");
        for (std::size_t i = 0; i < dirs.size(); ++i) {
                bigint dot = embed(dirs[i].vec(), emb.r);
                const auto& off = emb.offsets[i];
                if (off.magnitude != abs(dot) || off.sign != (dot < 0 ? -1 : 1))
                        fail("offset disagrees with r . v");
                if (off.magnitude == 0 || off.magnitude % p == 0)
                        fail("p divides an offset");
        }
}

inline embedding_data
make_embedding(point u_prime, std::int64_t p, coord_t side,
               const std::vector<direction>& dirs)
{
        embedding_data emb;
        emb.base = embedding_base(side);
        emb.r = build_r(u_prime, p, side);
        emb.u_prime = std::move(u_prime);
        emb.offsets = direction_offsets(emb.r, dirs, p);
        check_embedding(emb, side, p, dirs);
        return emb;
}

} // namespace pairblock
