#pragma once

#include <iosfwd>
#include <string>

#include "sicsearch/objective.hpp"

namespace sic {

inline constexpr const char* kToolVersion = "sicsearch-0.1.0";
inline constexpr int kDefaultDigits = 17;

/// Native solution-file contents: '#'-prefixed key=value header lines followed
/// by d lines of "re im" decimal pairs.
struct SolutionFile {
    Int dim = 0;
    std::string label = "a";
    int digits = kDefaultDigits;
    std::uint64_t seed = 0;
    std::string symmetry = "none";
    std::string eigenvalue;  // empty when not applicable
    std::string tool = kToolVersion;
    std::string timestamp;   // empty = omitted
    Vector components;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_number)
        : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
          line(line_number) {}
};

/// Canonical file name: sicfiducial.<d>.<label>.<digits>.txt
std::string solution_filename(Int dim, const std::string& label, int digits);

void write_solution(std::ostream& os, const SolutionFile& sol);
void write_solution_file(const std::string& path, const SolutionFile& sol);

/// Strict parse of the native format. Throws ParseError with a line number.
SolutionFile parse_solution(std::istream& is);
SolutionFile parse_solution_file(const std::string& path);

/// Permissive import: also accepts bare whitespace-separated "re im" lines
/// with the dimension inferred from the line count.
SolutionFile import_solution(std::istream& is);
SolutionFile import_solution_file(const std::string& path);

SolutionFile solution_from_candidate(const FiducialCandidate& c, const std::string& label,
                                     int digits = kDefaultDigits);

}  // namespace sic
