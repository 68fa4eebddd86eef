#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nfilt {

enum class Errc {
    invalid_argument,
    dimension_mismatch,
    not_convenient,
    infinite_colength,
    not_certified,
    oracle_cap,
    parse_error,
    unknown_variable,
    internal
};

inline std::string_view code_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::not_convenient: return "not-convenient";
        case Errc::infinite_colength: return "infinite-colength";
        case Errc::not_certified: return "not-certified";
        case Errc::oracle_cap: return "oracle-cap";
        case Errc::parse_error: return "parse-error";
        case Errc::unknown_variable: return "unknown-variable";
        case Errc::internal: return "internal";
    }
    return "internal";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline void require(bool cond, Errc code, const char* what) {
    if (!cond) throw Error(code, what);
}

enum class Verdict { yes, no, unknown };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

}// namespace nfilt
