#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pairblock/error.hpp"

namespace pairblock {

using coord_t = std::int64_t;

/// A lattice point (or any integer vector) in Z^d.
using point = std::vector<coord_t>;

namespace detail {

inline std::uint64_t
uabs(coord_t x)
{
        return x < 0 ? std::uint64_t(0) - std::uint64_t(x) : std::uint64_t(x);
}

inline std::optional<coord_t>
checked_mul(coord_t a, coord_t b)
{
        coord_t out;
        if (__builtin_mul_overflow(a, b, &out))
                return std::nullopt;
        return out;
}

inline std::optional<coord_t>
checked_add(coord_t a, coord_t b)
{
        coord_t out;
        if (__builtin_add_overflow(a, b, &out))
                return std::nullopt;
        return out;
}

} // namespace detail

inline std::string
to_string(std::span<const coord_t> v)
{
        std::ostringstream os;
        os << '(';
        for (std::size_t j = 0; j < v.size(); ++j)
                os << (j ? "," : "") << v[j];
        os << ')';
        return os.str();
}

/// gcd of the absolute coordinate values; 0 iff v is the zero vector.
inline std::uint64_t
gcd_vector(std::span<const coord_t> v)
{
        std::uint64_t g = 0;
        for (coord_t x : v)
                g = std::gcd(g, detail::uabs(x));
        return g;
}

/// A primitive integer vector with its first nonzero coordinate positive.
/// v and -v name the same direction.
class direction {
public:
        direction() = default;

        const point& vec() const noexcept { return v_; }
        std::size_t dim() const noexcept { return v_.size(); }
        coord_t operator[](std::size_t j) const { return v_[j]; }

        friend auto operator<=>(const direction&, const direction&) = default;
        friend bool operator==(const direction&, const direction&) = default;

        friend direction canonicalize_direction(point v);

private:
        explicit direction(point v) : v_(std::move(v)) {}

        point v_;
};

inline direction
canonicalize_direction(point v)
{
        if (v.empty())
                throw error(errc::zero_vector, "direction has no coordinates");
        auto g = gcd_vector(v);
        if (g == 0)
                throw error(errc::zero_vector, "direction is the zero vector");
        if (g != 1)
                throw error(errc::not_primitive,
                            "direction not primitive: " + to_string(v));
        auto lead = std::find_if(v.begin(), v.end(),
                                 [](coord_t x) { return x != 0; });
        if (*lead < 0)
                for (auto& x : v)
                        x = -x;
        return direction(std::move(v));
}

/// Canonicalizes every vector and drops sign duplicates, keeping the
/// first occurrence order. All vectors must share one dimension.
inline std::vector<direction>
canonical_direction_set(const std::vector<point>& vectors)
{
        std::vector<direction> out;
        for (const auto& v : vectors) {
                if (!out.empty() && v.size() != out.front().dim())
                        throw error(errc::dimension_mismatch,
                                    "directions have differing dimensions");
                auto dir = canonicalize_direction(v);
                if (std::find(out.begin(), out.end(), dir) == out.end())
                        out.push_back(std::move(dir));
        }
        return out;
}

/// Parses "1,0;0,1;1,-1" into integer vectors.
inline std::vector<point>
parse_vector_list(std::string_view text)
{
        std::vector<point> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
                auto semi = text.find(';', pos);
                auto item = text.substr(pos, semi == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : semi - pos);
                point v;
                std::size_t ipos = 0;
                while (ipos <= item.size()) {
                        auto comma = item.find(',', ipos);
                        std::string token(item.substr(
                            ipos, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - ipos));
                        token.erase(std::remove_if(token.begin(), token.end(),
                                                   [](char c) {
                                                           return c == ' ' || c == '\t';
                                                   }),
                                    token.end());
                        std::size_t used = 0;
                        coord_t x = 0;
                        try {
                                x = std::stoll(token, &used);
                        } catch (const std::exception&) {
                                used = 0;
                        }
                        if (token.empty() || used != token.size())
                                throw error(errc::parse_error,
                                            "bad integer '" + token + "' in vector list");
                        v.push_back(x);
                        if (comma == std::string_view::npos)
                                break;
                        ipos = comma + 1;
                }
                out.push_back(std::move(v));
                if (semi == std::string_view::npos)
                        break;
                pos = semi + 1;
        }
        return out;
}

/// The board {1,...,N}^d.
struct board_spec {
        coord_t side = 1;
        std::size_t dim = 1;

        bool contains(std::span<const coord_t> w) const
        {
                if (w.size() != dim)
                        return false;
                return std::all_of(w.begin(), w.end(), [&](coord_t x) {
                        return x >= 1 && x <= side;
                });
        }

        std::size_t cell_count() const
        {
                std::size_t count = 1;
                for (std::size_t j = 0; j < dim; ++j)
                        if (__builtin_mul_overflow(count, std::size_t(side), &count))
                                throw error(errc::invariant_violation,
                                            "board too large to index");
                return count;
        }

        /// Row-major index with the first coordinate most significant, so
        /// index order is lexicographic order.
        std::size_t index_of(std::span<const coord_t> w) const
        {
                std::size_t idx = 0;
                for (coord_t x : w)
                        idx = idx * std::size_t(side) + std::size_t(x - 1);
                return idx;
        }

        point point_at(std::size_t idx) const
        {
                point w(dim);
                for (std::size_t j = dim; j-- > 0;) {
                        w[j] = coord_t(idx % std::size_t(side)) + 1;
                        idx /= std::size_t(side);
                }
                return w;
        }

        template <class F>
        void for_each_point(F&& f) const
        {
                std::size_t count = cell_count();
                for (std::size_t i = 0; i < count; ++i)
                        f(point_at(i));
        }
};

/// m consecutive lattice points start + k*dir, 0 <= k < length.
struct window {
        point start;
        direction dir;
        coord_t length = 0;

        point at(coord_t k) const
        {
                point w = start;
                for (std::size_t j = 0; j < w.size(); ++j)
                        w[j] += k * dir[j];
                return w;
        }

        std::vector<point> points() const
        {
                std::vector<point> out;
                out.reserve(std::size_t(length));
                for (coord_t k = 0; k < length; ++k)
                        out.push_back(at(k));
                return out;
        }

        friend bool operator==(const window&, const window&) = default;
};

namespace detail {

/// Inclusive range of start coordinates along one axis, or nullopt when
/// no window of this length fits.
inline std::optional<std::pair<coord_t, coord_t>>
start_range(coord_t side, coord_t step, coord_t length)
{
        auto mag = uabs(step);
        if (length > 1 && mag >= std::uint64_t(side))
                return std::nullopt;
        auto span = length > 1 ? checked_mul(length - 1, coord_t(mag))
                               : std::optional<coord_t>(0);
        if (!span || *span >= side)
                return std::nullopt;
        if (step >= 0)
                return std::pair{coord_t(1), side - *span};
        return std::pair{1 + *span, side};
}

} // namespace detail

/// Number of windows of the given length along dir; N^{d-1}(N-m+1) for
/// axis directions.
inline std::uint64_t
window_count(const board_spec& board, const direction& dir, coord_t length)
{
        if (length < 1)
                return 0;
        std::uint64_t count = 1;
        for (std::size_t j = 0; j < board.dim; ++j) {
                auto range = detail::start_range(board.side, dir[j], length);
                if (!range)
                        return 0;
                count *= std::uint64_t(range->second - range->first + 1);
        }
        return count;
}

/// Visits every window fully inside the board, in lexicographic order of
/// the start point.
template <class F>
void
for_each_window(const board_spec& board, const direction& dir, coord_t length,
                F&& f)
{
        if (length < 1 || dir.dim() != board.dim)
                return;
        std::vector<std::pair<coord_t, coord_t>> ranges;
        for (std::size_t j = 0; j < board.dim; ++j) {
                auto range = detail::start_range(board.side, dir[j], length);
                if (!range)
                        return;
                ranges.push_back(*range);
        }
        window win{point(board.dim), dir, length};
        for (std::size_t j = 0; j < board.dim; ++j)
                win.start[j] = ranges[j].first;
        for (;;) {
                f(static_cast<const window&>(win));
                std::size_t j = board.dim;
                while (j-- > 0) {
                        if (win.start[j] < ranges[j].second) {
                                ++win.start[j];
                                break;
                        }
                        win.start[j] = ranges[j].first;
                }
                if (j == std::size_t(-1)) // wrapped past the first axis
                        return;
        }
}

inline std::vector<window>
enumerate_windows(const board_spec& board, const direction& dir, coord_t length)
{
        std::vector<window> out;
        for_each_window(board, dir, length,
                        [&](const window& w) { out.push_back(w); });
        return out;
}

} // namespace pairblock
