#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "pairblock/error.hpp"
#include "pairblock/pairing.hpp"

namespace pairblock {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

namespace detail {

inline std::int64_t
parse_int(const json& j, const std::string& field)
{
        if (!j.is_string())
                throw error(errc::parse_error, field + ": expected a decimal string");
        const auto& s = j.get_ref<const std::string&>();
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
                value = std::stoll(s, &used);
        } catch (const std::exception&) {
                used = 0;
        }
        if (s.empty() || used != s.size())
                throw error(errc::parse_error, field + ": bad integer '" + s + "'");
        return value;
}

inline const json&
field(const json& obj, const char* key)
{
        if (!obj.is_object() || !obj.contains(key))
                throw error(errc::parse_error, std::string("missing field '") + key + "'");
        return obj.at(key);
}

inline json
int_array(std::span<const coord_t> v)
{
        json out = json::array();
        for (auto x : v)
                out.push_back(std::to_string(x));
        return out;
}

} // namespace detail

inline json
point_json(std::span<const coord_t> w)
{
        return json(std::vector<coord_t>(w.begin(), w.end()));
}

/// Canonical certificate document. Every integer is a decimal string.
/// r is not stored; it is rebuilt from u', p, and N on load.
inline json
certificate_to_json(const pairing_certificate& cert)
{
        const auto& spec = cert.spec();
        const auto& emb = cert.embedding();
        json dirs = json::array();
        for (const auto& v : spec.dirs)
                dirs.push_back(detail::int_array(v.vec()));
        json residues = json::array();
        for (std::size_t i = 0; i < spec.n(); ++i) {
                const auto& t = cert.residues().triples[i];
                residues.push_back({{"delta", std::to_string(t.delta)},
                                    {"x", std::to_string(t.x)},
                                    {"y", std::to_string(t.y)},
                                    {"sign", std::to_string(emb.offsets[i].sign)}});
        }
        return {{"version", std::to_string(schema_version)},
                {"N", std::to_string(spec.board.side)},
                {"d", std::to_string(spec.board.dim)},
                {"directions", std::move(dirs)},
                {"p", std::to_string(spec.p)},
                {"m", std::to_string(spec.m)},
                {"u_prime", detail::int_array(emb.u_prime)},
                {"base", std::to_string(emb.base)},
                {"residues", std::move(residues)}};
}

inline std::string
dump_canonical(const json& doc)
{
        return doc.dump(2) + "\n";
}

/// Parses and fully re-validates a certificate. Throws parse_error for
/// malformed documents and invariant_violation for inconsistent ones.
inline pairing_certificate
certificate_from_json(const json& doc)
{
        using detail::field;
        using detail::parse_int;
        if (parse_int(field(doc, "version"), "version") != schema_version)
                throw error(errc::parse_error, "unsupported certificate version");
        std::int64_t side = parse_int(field(doc, "N"), "N");
        std::int64_t dim = parse_int(field(doc, "d"), "d");
        std::int64_t p = parse_int(field(doc, "p"), "p");
        std::int64_t m = parse_int(field(doc, "m"), "m");
        std::int64_t base = parse_int(field(doc, "base"), "base");
        if (side < 1 || dim < 1 || p < 2)
                throw error(errc::invariant_violation, "certificate: N, d, p out of range");

        auto read_vector = [&](const json& arr, const std::string& name) {
                if (!arr.is_array())
                        throw error(errc::parse_error, name + ": expected an array");
                point v;
                for (const auto& x : arr)
                        v.push_back(parse_int(x, name));
                if (v.size() != std::size_t(dim))
                        throw error(errc::invariant_violation,
                                    name + ": length differs from d");
                return v;
        };

        const auto& dirs_json = field(doc, "directions");
        if (!dirs_json.is_array())
                throw error(errc::parse_error, "directions: expected an array");
        std::vector<direction> dirs;
        for (const auto& v : dirs_json) {
                auto raw = read_vector(v, "directions");
                auto dir = canonicalize_direction(raw);
                if (dir.vec() != raw)
                        throw error(errc::invariant_violation,
                                    "certificate: direction " + to_string(raw)
                                        + " is not in canonical sign");
                dirs.push_back(std::move(dir));
        }

        point u = read_vector(field(doc, "u_prime"), "u_prime");
        for (auto x : u)
                if (x < 1 || x > p)
                        throw error(errc::invariant_violation,
                                    "certificate: u' entry outside {1..p}");
        if (base != embedding_base(side))
                throw error(errc::invariant_violation,
                            "certificate: base does not match N");
        if (!avoids_all(u, dirs, p))
                throw error(errc::invariant_violation,
                            "certificate: u' . v divisible by p");
        auto emb = make_embedding(std::move(u), p, side, dirs);

        const auto& res_json = field(doc, "residues");
        if (!res_json.is_array() || res_json.size() != dirs.size())
                throw error(errc::invariant_violation,
                            "certificate: one residue entry per direction required");
        residue_system res{p, {}};
        for (std::size_t i = 0; i < dirs.size(); ++i) {
                const auto& r = res_json[i];
                res.triples.push_back({parse_int(field(r, "delta"), "delta"),
                                       parse_int(field(r, "x"), "x"),
                                       parse_int(field(r, "y"), "y")});
                if (parse_int(field(r, "sign"), "sign") != emb.offsets[i].sign)
                        throw error(errc::invariant_violation,
                                    "certificate: sign disagrees with r . v");
        }
        game_spec spec{{side, std::size_t(dim)}, std::move(dirs), p, m};
        return pairing_certificate(std::move(spec), std::move(emb), std::move(res));
}

inline pairing_certificate
certificate_from_string(const std::string& text)
{
        json doc;
        try {
                doc = json::parse(text);
        } catch (const json::exception& e) {
                throw error(errc::parse_error, std::string("certificate JSON: ") + e.what());
        }
        return certificate_from_json(doc);
}

inline json
window_json(const window& win)
{
        json pts = json::array();
        for (const auto& w : win.points())
                pts.push_back(point_json(w));
        return {{"start", point_json(win.start)},
                {"direction", point_json(win.dir.vec())},
                {"length", win.length},
                {"points", std::move(pts)}};
}

inline json
report_to_json(const blocking_report& rep)
{
        json out = {{"version", schema_version},
                    {"blocked", rep.blocked},
                    {"m", rep.m},
                    {"windows_checked", rep.windows_checked},
                    {"per_direction_counts", rep.per_direction_counts}};
        if (rep.counterexample)
                out["counterexample"] = window_json(*rep.counterexample);
        return out;
}

inline json
partner_json(const partner_result& res)
{
        switch (res.status) {
        case partner_result::kind::matched:
                return {{"kind", "matched"},
                        {"partner", point_json(res.partner)},
                        {"direction", res.dir_index}};
        case partner_result::kind::matched_off_board:
                return {{"kind", "matched_off_board"}, {"direction", res.dir_index}};
        case partner_result::kind::unmatched:
                break;
        }
        return {{"kind", "unmatched"}};
}

} // namespace pairblock
