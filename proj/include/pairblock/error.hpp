#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pairblock {

enum class errc {
        not_primitive,
        zero_vector,
        dimension_mismatch,
        infeasible,
        invariant_violation,
        invalid_vector,
        malformed_instance,
        parse_error,
        illegal_move,
};

constexpr std::string_view
to_string(errc code)
{
        switch (code) {
        case errc::not_primitive: return "NotPrimitive";
        case errc::zero_vector: return "ZeroVector";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::infeasible: return "Infeasible";
        case errc::invariant_violation: return "InternalInvariantViolation";
        case errc::invalid_vector: return "InvalidVector";
        case errc::malformed_instance: return "MalformedInstance";
        case errc::parse_error: return "ParseError";
        case errc::illegal_move: return "IllegalMove";
        }
        return "Unknown";
}

class error : public std::runtime_error {
public:
        error(errc code, const std::string& message)
            : std::runtime_error(message), code_(code)
        {
        }

        errc code() const noexcept { return code_; }

private:
        errc code_;
};

} // namespace pairblock
