#pragma once

// Error taxonomy shared by every module. Each error carries the module it was
// raised in plus a stable code so the CLI can emit structured diagnostics.

#include <stdexcept>
#include <string>
#include <string_view>

namespace logcob {

enum class errc {
    non_confluent,
    degree_mismatch,
    bad_point_class,
    unknown_generator,
    ring_mismatch,
    not_a_bundle,
    missing_self_descriptor,
    missing_restriction,
    unknown_component,
    unknown_builtin,
    wrong_dimension,
    weight_mismatch,
    degree_infeasible,
    even_exponent,
    rank_mismatch,
    bad_constant_term,
    out_of_range,
    inconsistent,
    parse_error,
};

inline std::string_view errc_name(errc c) {
    switch (c) {
        case errc::non_confluent: return "NonConfluent";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::bad_point_class: return "BadPointClass";
        case errc::unknown_generator: return "UnknownGenerator";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_a_bundle: return "NotABundle";
        case errc::missing_self_descriptor: return "MissingSelfDescriptor";
        case errc::missing_restriction: return "MissingRestriction";
        case errc::unknown_component: return "UnknownComponent";
        case errc::unknown_builtin: return "UnknownBuiltin";
        case errc::wrong_dimension: return "WrongDimension";
        case errc::weight_mismatch: return "WeightMismatch";
        case errc::degree_infeasible: return "DegreeInfeasible";
        case errc::even_exponent: return "EvenExponent";
        case errc::rank_mismatch: return "RankMismatch";
        case errc::bad_constant_term: return "BadConstantTerm";
        case errc::out_of_range: return "OutOfRange";
        case errc::inconsistent: return "Inconsistent";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, std::string module, const std::string& what)
        : std::runtime_error(std::string(module) + ": " + std::string(errc_name(code)) + ": " + what),
          code_(code),
          module_(std::move(module)) {}

    errc code() const noexcept { return code_; }
    const std::string& module() const noexcept { return module_; }

private:
    errc code_;
    std::string module_;
};

[[noreturn]] inline void raise(errc code, std::string_view module, const std::string& what) {
    throw Error(code, std::string(module), what);
}

} // namespace logcob
