#ifndef HURWITZ_ERROR_HPP
#define HURWITZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class Errc {
    invalid_partition,
    wrong_length,
    wrong_total,
    genus_too_large,      // h < 2g
    degree_too_small,     // k < h+1
    incompatible_datum,
    out_of_covered_family,
    out_of_range,
    degree_limit_exceeded,
    overflow,
    internal,
    parse,
};

constexpr std::string_view to_string(Errc e) noexcept
{
    switch (e) {
    case Errc::invalid_partition: return "invalid partition";
    case Errc::wrong_length: return "wrong-length partition";
    case Errc::wrong_total: return "wrong-total partition";
    case Errc::genus_too_large: return "h < 2g";
    case Errc::degree_too_small: return "k < h+1";
    case Errc::incompatible_datum: return "incompatible datum";
    case Errc::out_of_covered_family: return "out of covered family";
    case Errc::out_of_range: return "argument out of range";
    case Errc::degree_limit_exceeded: return "degree limit exceeded";
    case Errc::overflow: return "integer overflow";
    case Errc::internal: return "internal error";
    case Errc::parse: return "parse error";
    }
    return "unknown error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail))
        , code_(code)
    {}
    explicit Error(Errc code) : Error(code, std::string{}) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hurwitz

#endif
