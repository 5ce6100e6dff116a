#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pairblock/embedding.hpp"
#include "pairblock/error.hpp"
#include "pairblock/lattice.hpp"
#include "pairblock/pairing.hpp"
#include "pairblock/random.hpp"
#include "pairblock/residue.hpp"
#include "pairblock/serialization.hpp"

namespace pairblock {

// ---------------------------------------------------------------------------
// Periodic pairings of Z^d and the m <= 2n refuter

/// A pairing of Z^d invariant under translation by the period box. Each
/// class of the box is either free or paired along +-v for some winning
/// direction v.
class periodic_pairing {
public:
        periodic_pairing() = default;
        explicit periodic_pairing(point period)
            : period_(std::move(period)), offsets_(box_size(period_))
        {
        }

        const point& period() const noexcept { return period_; }
        std::size_t dim() const noexcept { return period_.size(); }
        std::size_t class_count() const noexcept { return offsets_.size(); }

        std::size_t class_of(std::span<const coord_t> w) const
        {
                std::size_t idx = 0;
                for (std::size_t j = 0; j < period_.size(); ++j)
                        idx = idx * std::size_t(period_[j])
                            + std::size_t(mod_floor(w[j], period_[j]));
                return idx;
        }

        point representative(std::size_t idx) const
        {
                point w(period_.size());
                for (std::size_t j = period_.size(); j-- > 0;) {
                        w[j] = coord_t(idx % std::size_t(period_[j]));
                        idx /= std::size_t(period_[j]);
                }
                return w;
        }

        const std::optional<point>& offset_of_class(std::size_t idx) const
        {
                return offsets_[idx];
        }

        const std::optional<point>& offset_at(std::span<const coord_t> w) const
        {
                return offsets_[class_of(w)];
        }

        void set_offset(std::size_t idx, std::optional<point> offset)
        {
                offsets_[idx] = std::move(offset);
        }

private:
        static std::size_t box_size(const point& period)
        {
                std::size_t count = 1;
                for (auto side : period) {
                        if (side < 1)
                                throw error(errc::malformed_instance, "period entries must be >= 1");
                        count *= std::size_t(side);
                }
                return count;
        }

        point period_;
        std::vector<std::optional<point>> offsets_;
};

namespace detail {

inline point
add(std::span<const coord_t> a, std::span<const coord_t> b, coord_t scale = 1)
{
        point out(a.begin(), a.end());
        for (std::size_t j = 0; j < out.size(); ++j)
                out[j] += scale * b[j];
        return out;
}

} // namespace detail

/// Throws malformed_instance unless the periodic extension is an involution
/// whose pairs all lie along +-v for a given direction.
inline void
validate_periodic_pairing(const periodic_pairing& pairing,
                          const std::vector<direction>& dirs)
{
        for (std::size_t c = 0; c < pairing.class_count(); ++c) {
                const auto& off = pairing.offset_of_class(c);
                if (!off)
                        continue;
                bool along = std::any_of(dirs.begin(), dirs.end(), [&](const direction& v) {
                        point neg = v.vec();
                        for (auto& x : neg)
                                x = -x;
                        return *off == v.vec() || *off == neg;
                });
                if (!along)
                        throw error(errc::malformed_instance,
                                    "offset " + to_string(*off) + " is not along a direction");
                auto rep = pairing.representative(c);
                auto target = pairing.class_of(detail::add(rep, *off));
                if (target == c)
                        throw error(errc::malformed_instance, "class paired with itself");
                const auto& back = pairing.offset_of_class(target);
                if (!back || detail::add(*back, *off) != point(off->size(), 0))
                        throw error(errc::malformed_instance, "pairing is not an involution");
        }
}

/// True when two points of the window are partners under the pairing.
inline bool
window_has_internal_pair(const periodic_pairing& pairing, const window& win)
{
        auto pts = win.points();
        for (const auto& w : pts) {
                const auto& off = pairing.offset_at(w);
                if (!off)
                        continue;
                auto mate = detail::add(w, *off);
                if (std::find(pts.begin(), pts.end(), mate) != pts.end())
                        return true;
        }
        return false;
}

/// First window of length m with no internal pair. By periodicity only
/// starts inside one period box need checking.
inline std::optional<window>
refute_pairing(const periodic_pairing& pairing, const std::vector<direction>& dirs,
               coord_t m)
{
        for (const auto& v : dirs) {
                for (std::size_t c = 0; c < pairing.class_count(); ++c) {
                        window win{pairing.representative(c), v, m};
                        if (!window_has_internal_pair(pairing, win))
                                return win;
                }
        }
        return std::nullopt;
}

/// Random valid pairing with each period side in [1, max_side]. Classes are
/// visited in random order and paired along a random direction and sign
/// whenever the target class is still free; some classes stay free.
inline periodic_pairing
sample_periodic_pairing(rng_t& rng, const std::vector<direction>& dirs,
                        coord_t max_side = 6)
{
        const std::size_t d = dirs.front().dim();
        point period(d);
        for (auto& side : period)
                side = 1 + coord_t(uniform_below(rng, std::uint64_t(max_side)));
        periodic_pairing pairing(period);
        std::vector<std::size_t> order(pairing.class_count());
        for (std::size_t c = 0; c < order.size(); ++c)
                order[c] = c;
        for (std::size_t k = order.size(); k > 1; --k)
                std::swap(order[k - 1], order[uniform_below(rng, k)]);
        for (auto c : order) {
                if (pairing.offset_of_class(c) || uniform_below(rng, 8) == 0)
                        continue;
                std::vector<point> options;
                for (const auto& v : dirs) {
                        options.push_back(v.vec());
                        options.push_back(detail::add(point(d, 0), v.vec(), -1));
                }
                for (std::size_t k = options.size(); k > 1; --k)
                        std::swap(options[k - 1], options[uniform_below(rng, k)]);
                auto rep = pairing.representative(c);
                for (const auto& off : options) {
                        auto target = pairing.class_of(detail::add(rep, off));
                        if (target == c || pairing.offset_of_class(target))
                                continue;
                        pairing.set_offset(c, off);
                        pairing.set_offset(target, detail::add(point(d, 0), off, -1));
                        break;
                }
        }
        return pairing;
}

/// The certificate's pairing depends only on u'.w mod p, so it is periodic
/// with box p x ... x p.
inline periodic_pairing
certificate_to_periodic(const pairing_certificate& cert)
{
        const auto& spec = cert.spec();
        periodic_pairing pairing(point(spec.board.dim, spec.p));
        for (std::size_t c = 0; c < pairing.class_count(); ++c) {
                auto rep = pairing.representative(c);
                int role = cert.role_of_residue(residue_of(rep, cert));
                if (role == 0)
                        continue;
                std::size_t i = std::size_t(std::abs(role)) - 1;
                coord_t step = role > 0 ? cert.embedding().offsets[i].sign
                                        : -cert.embedding().offsets[i].sign;
                pairing.set_offset(c, detail::add(point(spec.board.dim, 0),
                                                  spec.dirs[i].vec(), step));
        }
        return pairing;
}

struct lower_bound_report {
        std::size_t n = 0;
        coord_t m = 0;
        std::uint64_t trials = 0;
        std::uint64_t refuted = 0;
        std::uint64_t witnesses_validated = 0;
        std::optional<bool> certificate_refuted; ///< set when a certificate was injected
        std::optional<coord_t> certificate_m;
};

/// Samples random periodic pairings and refutes each at m = 2n. When a
/// certificate is supplied its pairing is also tested, at m = p+1.
inline lower_bound_report
lower_bound_demo(const std::vector<direction>& dirs, std::uint64_t trials,
                 std::uint64_t seed, const pairing_certificate* cert = nullptr)
{
        lower_bound_report rep;
        rep.n = dirs.size();
        rep.m = 2 * coord_t(dirs.size());
        rng_t rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
                auto pairing = sample_periodic_pairing(rng, dirs);
                validate_periodic_pairing(pairing, dirs);
                ++rep.trials;
                if (auto win = refute_pairing(pairing, dirs, rep.m)) {
                        ++rep.refuted;
                        if (!window_has_internal_pair(pairing, *win))
                                ++rep.witnesses_validated;
                }
        }
        if (cert) {
                auto pairing = certificate_to_periodic(*cert);
                validate_periodic_pairing(pairing, cert->spec().dirs);
                rep.certificate_m = cert->spec().m;
                rep.certificate_refuted =
                    refute_pairing(pairing, cert->spec().dirs, cert->spec().m).has_value();
        }
        return rep;
}

inline json
lower_bound_json(const lower_bound_report& rep)
{
        json out = {{"version", schema_version},
                    {"n", rep.n},
                    {"m", rep.m},
                    {"trials", rep.trials},
                    {"refuted", rep.refuted},
                    {"witnesses_validated", rep.witnesses_validated}};
        if (rep.certificate_refuted) {
                out["certificate_m"] = *rep.certificate_m;
                out["certificate_refuted"] = *rep.certificate_refuted;
        }
        return out;
}

// ---------------------------------------------------------------------------
// Mod-6 obstruction for directions (1,0), (0,1), (1,1)

struct mod6_row {
        std::int64_t delta1 = 0;
        std::int64_t delta2 = 0;
        std::int64_t delta3 = 0;
        bool excluded = false; ///< delta3 == 0, outside the solver's domain
        bool feasible = false;
};

struct mod6_report {
        std::vector<mod6_row> rows;
        std::size_t valid_cases = 0;
        std::size_t excluded_cases = 0;
        std::size_t infeasible_cases = 0;
        bool control_feasible = false; ///< oracle_solve(7, (1,2,3))

        bool obstruction_holds() const
        {
                return infeasible_cases == valid_cases && control_feasible;
        }
};

inline mod6_report
mod6_obstruction_check()
{
        mod6_report rep;
        for (std::int64_t d1 = 1; d1 <= 5; ++d1) {
                for (std::int64_t d2 = 1; d2 <= 5; ++d2) {
                        mod6_row row{d1, d2, (d1 + d2) % 6};
                        if (row.delta3 == 0) {
                                row.excluded = true;
                                ++rep.excluded_cases;
                        } else {
                                ++rep.valid_cases;
                                row.feasible = oracle_solve(6, {d1, d2, row.delta3}).has_value();
                                if (!row.feasible)
                                        ++rep.infeasible_cases;
                        }
                        rep.rows.push_back(row);
                }
        }
        rep.control_feasible = oracle_solve(7, {1, 2, 3}).has_value();
        return rep;
}

inline json
mod6_json(const mod6_report& rep)
{
        json rows = json::array();
        for (const auto& r : rep.rows) {
                json row = {{"delta_1", r.delta1}, {"delta_2", r.delta2}, {"delta_3", r.delta3}};
                row["result"] = r.excluded ? "excluded" : (r.feasible ? "feasible" : "infeasible");
                rows.push_back(std::move(row));
        }
        return {{"version", schema_version},
                {"modulus", 6},
                {"rows", std::move(rows)},
                {"valid_cases", rep.valid_cases},
                {"excluded_cases", rep.excluded_cases},
                {"infeasible_cases", rep.infeasible_cases},
                {"control_modulus", 7},
                {"control_feasible", rep.control_feasible},
                {"obstruction_holds", rep.obstruction_holds()}};
}

inline void
write_mod6_csv(std::ostream& os, const mod6_report& rep)
{
        os << "delta_1,delta_2,delta_3,result\n";
        for (const auto& r : rep.rows)
                os << r.delta1 << ',' << r.delta2 << ',' << r.delta3 << ','
                   << (r.excluded ? "excluded" : (r.feasible ? "feasible" : "infeasible"))
                   << '\n';
}

// ---------------------------------------------------------------------------
// Partition search over Z_{2n}^d

/// pairs[i] lists the x points of direction i; each pairs with x + v_i.
struct z2n_partition {
        std::vector<std::vector<point>> xs;
};

namespace detail {

class z2n_space {
public:
        z2n_space(std::int64_t modulus, std::size_t dim) : mod_(modulus), dim_(dim)
        {
                size_ = 1;
                for (std::size_t j = 0; j < dim; ++j)
                        size_ *= std::size_t(modulus);
        }

        std::size_t size() const noexcept { return size_; }

        std::size_t index(std::span<const coord_t> w) const
        {
                std::size_t idx = 0;
                for (auto x : w)
                        idx = idx * std::size_t(mod_) + std::size_t(mod_floor(x, mod_));
                return idx;
        }

        point at(std::size_t idx) const
        {
                point w(dim_);
                for (std::size_t j = dim_; j-- > 0;) {
                        w[j] = coord_t(idx % std::size_t(mod_));
                        idx /= std::size_t(mod_);
                }
                return w;
        }

        std::size_t shift(std::size_t idx, std::span<const coord_t> v, coord_t scale) const
        {
                return index(add(at(idx), v, scale));
        }

private:
        std::int64_t mod_;
        std::size_t dim_;
        std::size_t size_;
};

inline std::vector<point>
reduce_vectors(std::size_t n, std::size_t d, const std::vector<point>& vectors)
{
        if (vectors.size() != n)
                throw error(errc::invalid_vector, "expected exactly n vectors");
        const std::int64_t mod = 2 * std::int64_t(n);
        std::vector<point> out;
        for (const auto& v : vectors) {
                if (v.size() != d)
                        throw error(errc::invalid_vector, "vector dimension differs from d");
                point r(d);
                for (std::size_t j = 0; j < d; ++j)
                        r[j] = mod_floor(v[j], mod);
                if (std::all_of(r.begin(), r.end(), [](coord_t x) { return x == 0; }))
                        throw error(errc::invalid_vector,
                                    "vector " + to_string(v) + " is zero in Z_2n^d");
                out.push_back(std::move(r));
        }
        return out;
}

class partition_search {
public:
        partition_search(std::size_t n, std::size_t d, std::vector<point> vectors)
            : space_(2 * std::int64_t(n), d), vs_(std::move(vectors)),
              owner_(space_.size(), unused), coset_(vs_.size()),
              coset_used_(vs_.size()), result_{std::vector<std::vector<point>>(vs_.size())}
        {
                quota_ = space_.size() / (2 * n);
                // coset id of c under <v_i>: smallest index among c + k v_i
                for (std::size_t i = 0; i < vs_.size(); ++i) {
                        coset_[i].assign(space_.size(), 0);
                        coset_used_[i].assign(space_.size(), false);
                        for (std::size_t c = 0; c < space_.size(); ++c) {
                                std::size_t best = c, cur = c;
                                for (std::int64_t k = 0; k < 2 * std::int64_t(n); ++k) {
                                        cur = space_.shift(cur, vs_[i], 1);
                                        best = std::min(best, cur);
                                }
                                coset_[i][c] = best;
                        }
                }
        }

        std::optional<z2n_partition> run()
        {
                if (search())
                        return result_;
                return std::nullopt;
        }

private:
        static constexpr std::size_t unused = std::size_t(-1);

        bool search()
        {
                auto free = std::find(owner_.begin(), owner_.end(), unused);
                if (free == owner_.end())
                        return true;
                std::size_t c = std::size_t(free - owner_.begin());
                for (std::size_t i = 0; i < vs_.size(); ++i) {
                        if (result_.xs[i].size() >= quota_)
                                continue;
                        // c as x_i, then c as y_i
                        for (coord_t sign : {1, -1}) {
                                std::size_t other = space_.shift(c, vs_[i], sign);
                                std::size_t x = sign > 0 ? c : other;
                                if (other == c || owner_[other] != unused
                                    || coset_used_[i][coset_[i][x]])
                                        continue;
                                owner_[c] = owner_[other] = i;
                                coset_used_[i][coset_[i][x]] = true;
                                result_.xs[i].push_back(space_.at(x));
                                if (search())
                                        return true;
                                result_.xs[i].pop_back();
                                coset_used_[i][coset_[i][x]] = false;
                                owner_[c] = owner_[other] = unused;
                        }
                }
                return false;
        }

        z2n_space space_;
        std::vector<point> vs_;
        std::vector<std::size_t> owner_;
        std::vector<std::vector<std::size_t>> coset_;
        std::vector<std::vector<bool>> coset_used_;
        z2n_partition result_;
        std::size_t quota_ = 0;
};

} // namespace detail

/// Backtracking search for a partition of Z_{2n}^d into pairs
/// (x, x + v_i), (2n)^(d-1) per direction, with the x's of each direction
/// pairwise differing by a non-multiple of v_i.
inline std::optional<z2n_partition>
conjecture2_search(std::size_t n, std::size_t d, const std::vector<point>& vectors)
{
        if (n < 1 || d < 1)
                throw error(errc::invalid_vector, "n and d must be positive");
        auto reduced = detail::reduce_vectors(n, d, vectors);
        detail::z2n_space space(2 * std::int64_t(n), d);
        if (space.size() > 64)
                throw error(errc::invariant_violation,
                            "Z_2n^d too large for exhaustive search (limit 64 points)");
        return detail::partition_search(n, d, std::move(reduced)).run();
}

/// Re-checks a partition against the defining constraints directly.
inline bool
validate_conjecture2(std::size_t n, std::size_t d, const std::vector<point>& vectors,
                     const z2n_partition& part)
{
        const std::int64_t mod = 2 * std::int64_t(n);
        std::vector<point> vs;
        try {
                vs = detail::reduce_vectors(n, d, vectors);
        } catch (const error&) {
                return false;
        }
        detail::z2n_space space(mod, d);
        if (part.xs.size() != n)
                return false;
        std::vector<int> covered(space.size(), 0);
        std::size_t quota = space.size() / std::size_t(mod);
        for (std::size_t i = 0; i < n; ++i) {
                if (part.xs[i].size() != quota)
                        return false;
                for (const auto& x : part.xs[i]) {
                        if (x.size() != d)
                                return false;
                        ++covered[space.index(x)];
                        ++covered[space.index(detail::add(x, vs[i]))];
                }
                for (std::size_t a = 0; a < part.xs[i].size(); ++a)
                        for (std::size_t b = a + 1; b < part.xs[i].size(); ++b) {
                                auto diff = detail::add(part.xs[i][a], part.xs[i][b], -1);
                                for (std::int64_t k = 0; k < mod; ++k)
                                        if (space.index(diff)
                                            == space.index(detail::add(point(d, 0), vs[i], k)))
                                                return false;
                        }
        }
        return std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
}

inline json
conjecture2_json(std::size_t n, std::size_t d, const std::vector<point>& vectors,
                 const std::optional<z2n_partition>& part)
{
        json out = {{"version", schema_version}, {"n", n}, {"d", d}};
        out["found"] = part.has_value();
        if (part) {
                json pairs = json::array();
                for (std::size_t i = 0; i < n; ++i)
                        for (const auto& x : part->xs[i]) {
                                point y = detail::add(x, vectors[i]);
                                for (auto& c : y)
                                        c = mod_floor(c, 2 * coord_t(n));
                                pairs.push_back({{"direction", i},
                                                 {"x", point_json(x)},
                                                 {"y", point_json(y)}});
                        }
                out["pairs"] = std::move(pairs);
                out["validated"] = validate_conjecture2(n, d, vectors, *part);
        }
        return out;
}

// ---------------------------------------------------------------------------
// Rainbow perfect matchings in cycle-colored regular graphs

struct colored_edge {
        std::size_t u = 0;
        std::size_t v = 0;
        std::string color;
};

struct colored_graph {
        std::size_t vertices = 0;
        std::vector<colored_edge> edges;
};

/// Colors in order of first appearance.
inline std::vector<std::string>
color_order(const colored_graph& g)
{
        std::vector<std::string> colors;
        for (const auto& e : g.edges)
                if (std::find(colors.begin(), colors.end(), e.color) == colors.end())
                        colors.push_back(e.color);
        return colors;
}

/// Throws malformed_instance unless the graph is 2d-regular and every color
/// class is a single cycle of length 2d. Returns d.
inline std::size_t
validate_colored_graph(const colored_graph& g)
{
        auto fail = [](const std::string& what) {
                throw error(errc::malformed_instance, "colored graph: " + what);
        };
        if (g.vertices == 0 || g.vertices > 16)
                fail("vertex count must be in 1..16");
        std::vector<std::size_t> degree(g.vertices, 0);
        for (const auto& e : g.edges) {
                if (e.u >= g.vertices || e.v >= g.vertices)
                        fail("edge endpoint out of range");
                if (e.u == e.v)
                        fail("loops are not allowed");
                ++degree[e.u];
                ++degree[e.v];
        }
        std::size_t reg = degree.front();
        if (reg == 0 || reg % 2 != 0)
                fail("degree must be a positive even number");
        for (auto deg : degree)
                if (deg != reg)
                        fail("graph is not regular");
        for (const auto& color : color_order(g)) {
                std::map<std::size_t, std::vector<std::size_t>> adj;
                std::size_t count = 0;
                for (const auto& e : g.edges)
                        if (e.color == color) {
                                adj[e.u].push_back(e.v);
                                adj[e.v].push_back(e.u);
                                ++count;
                        }
                if (count != reg || adj.size() != reg)
                        fail("color " + color + " is not a cycle of length " + std::to_string(reg));
                for (const auto& [_, nbrs] : adj)
                        if (nbrs.size() != 2)
                                fail("color " + color + " is not a cycle");
                std::vector<std::size_t> stack{adj.begin()->first};
                std::vector<std::size_t> seen{adj.begin()->first};
                while (!stack.empty()) {
                        auto x = stack.back();
                        stack.pop_back();
                        for (auto y : adj[x])
                                if (std::find(seen.begin(), seen.end(), y) == seen.end()) {
                                        seen.push_back(y);
                                        stack.push_back(y);
                                }
                }
                if (seen.size() != adj.size())
                        fail("color " + color + " is not connected");
        }
        return reg / 2;
}

/// Chosen edge indices, one per color in color_order().
using rainbow_matching = std::vector<std::size_t>;

inline std::optional<rainbow_matching>
conjecture3_search(const colored_graph& g)
{
        validate_colored_graph(g);
        auto colors = color_order(g);
        if (2 * colors.size() != g.vertices)
                return std::nullopt;
        std::vector<std::vector<std::size_t>> by_color(colors.size());
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
                auto c = std::find(colors.begin(), colors.end(), g.edges[k].color) - colors.begin();
                by_color[std::size_t(c)].push_back(k);
        }
        std::vector<bool> used(g.vertices, false);
        rainbow_matching chosen;
        std::function<bool(std::size_t)> pick = [&](std::size_t c) {
                if (c == colors.size())
                        return true;
                for (auto k : by_color[c]) {
                        const auto& e = g.edges[k];
                        if (used[e.u] || used[e.v])
                                continue;
                        used[e.u] = used[e.v] = true;
                        chosen.push_back(k);
                        if (pick(c + 1))
                                return true;
                        chosen.pop_back();
                        used[e.u] = used[e.v] = false;
                }
                return false;
        };
        if (pick(0))
                return chosen;
        return std::nullopt;
}

/// One edge of each color, vertex-disjoint, covering every vertex.
inline bool
validate_rainbow_matching(const colored_graph& g, const rainbow_matching& m)
{
        auto colors = color_order(g);
        if (m.size() != colors.size())
                return false;
        std::vector<bool> covered(g.vertices, false);
        std::vector<bool> color_seen(colors.size(), false);
        for (auto k : m) {
                if (k >= g.edges.size())
                        return false;
                const auto& e = g.edges[k];
                auto c = std::size_t(std::find(colors.begin(), colors.end(), e.color) - colors.begin());
                if (color_seen[c] || covered[e.u] || covered[e.v])
                        return false;
                color_seen[c] = covered[e.u] = covered[e.v] = true;
        }
        return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

inline colored_graph
colored_graph_from_json(const json& doc)
{
        try {
                colored_graph g;
                g.vertices = doc.at("vertices").get<std::size_t>();
                for (const auto& e : doc.at("edges")) {
                        const auto& color = e.at("color");
                        g.edges.push_back({e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(),
                                           color.is_string() ? color.get<std::string>() : color.dump()});
                }
                return g;
        } catch (const json::exception& ex) {
                throw error(errc::parse_error, std::string("colored graph JSON: ") + ex.what());
        }
}

inline json
conjecture3_json(const colored_graph& g, const std::optional<rainbow_matching>& m)
{
        json out = {{"version", schema_version}, {"vertices", g.vertices}};
        out["found"] = m.has_value();
        if (m) {
                json edges = json::array();
                for (auto k : *m)
                        edges.push_back({{"color", g.edges[k].color},
                                         {"u", g.edges[k].u},
                                         {"v", g.edges[k].v}});
                out["matching"] = std::move(edges);
                out["validated"] = validate_rainbow_matching(g, *m);
        }
        return out;
}

} // namespace pairblock
