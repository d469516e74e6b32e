#pragma once

#include <stdexcept>
#include <string>

namespace amod {

enum class Errc {
    Undecided,
    Unsupported,
    AbsentSimplex,
    EmptyComplex,
    OverlappingVertices,
    NotDominated,
    ClaimViolation,
    HeightTooSmall,
    UnassignedGenerator,
    BadInput,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::Undecided: return "UNDECIDED";
        case Errc::Unsupported: return "UNSUPPORTED";
        case Errc::AbsentSimplex: return "ABSENT_SIMPLEX";
        case Errc::EmptyComplex: return "EMPTY_COMPLEX";
        case Errc::OverlappingVertices: return "OVERLAPPING_VERTICES";
        case Errc::NotDominated: return "NOT_DOMINATED";
        case Errc::ClaimViolation: return "CLAIM_VIOLATION";
        case Errc::HeightTooSmall: return "HEIGHT_TOO_SMALL";
        case Errc::UnassignedGenerator: return "UNASSIGNED_GENERATOR";
        case Errc::BadInput: return "BAD_INPUT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace amod
