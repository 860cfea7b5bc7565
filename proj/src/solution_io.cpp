#include "sicsearch/solution_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

namespace sic {

std::string solution_filename(Int dim, const std::string& label, int digits) {
    return "sicfiducial." + std::to_string(dim) + "." + label + "." + std::to_string(digits) +
           ".txt";
}

void write_solution(std::ostream& os, const SolutionFile& sol) {
    os << "# sicfiducial dim=" << sol.dim << " label=" << sol.label << " digits=" << sol.digits
       << "\n";
    os << "# seed=" << sol.seed << " symmetry=" << sol.symmetry;
    if (!sol.eigenvalue.empty()) os << " eigenvalue=" << sol.eigenvalue;
    os << " tool=" << sol.tool << "\n";
    if (!sol.timestamp.empty()) os << "# timestamp=" << sol.timestamp << "\n";
    os << std::setprecision(sol.digits);
    for (Int k = 0; k < sol.dim; ++k)
        os << sol.components(k).real() << " " << sol.components(k).imag() << "\n";
}

void write_solution_file(const std::string& path, const SolutionFile& sol) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_solution(os, sol);
}

namespace {

std::map<std::string, std::string> parse_header_pairs(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return kv;
}

bool parse_pair_line(const std::string& line, double& re, double& im) {
    std::istringstream ss(line);
    if (!(ss >> re >> im)) return false;
    std::string rest;
    if (ss >> rest) return false;  // trailing garbage
    return true;
}

SolutionFile parse_stream(std::istream& is, bool permissive) {
    SolutionFile sol;
    std::vector<Complex> body;
    std::map<std::string, std::string> header;
    std::string line;
    int line_no = 0;
    bool saw_header = false;

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[0] == '#') {
            saw_header = true;
            for (auto& [k, v] : parse_header_pairs(line.substr(1))) header[k] = v;
            continue;
        }
        double re = 0.0, im = 0.0;
        if (!parse_pair_line(line, re, im))
            throw ParseError("expected two decimal numbers", line_no);
        body.emplace_back(re, im);
    }

    if (!saw_header && !permissive)
        throw ParseError("missing '#' header (use import mode for bare files)", 1);
    if (body.empty()) throw ParseError("no vector components found", line_no);

    if (auto it = header.find("dim"); it != header.end()) {
        sol.dim = std::stoll(it->second);
        if (sol.dim != static_cast<Int>(body.size()))
            throw ParseError("component count " + std::to_string(body.size()) +
                                 " does not match declared dim " + std::to_string(sol.dim),
                             line_no);
    } else {
        sol.dim = static_cast<Int>(body.size());
    }
    if (auto it = header.find("label"); it != header.end()) sol.label = it->second;
    if (auto it = header.find("digits"); it != header.end()) sol.digits = std::stoi(it->second);
    if (auto it = header.find("seed"); it != header.end()) sol.seed = std::stoull(it->second);
    if (auto it = header.find("symmetry"); it != header.end()) sol.symmetry = it->second;
    if (auto it = header.find("eigenvalue"); it != header.end()) sol.eigenvalue = it->second;
    if (auto it = header.find("tool"); it != header.end()) sol.tool = it->second;
    if (auto it = header.find("timestamp"); it != header.end()) sol.timestamp = it->second;

    sol.components.resize(static_cast<Int>(body.size()));
    for (std::size_t k = 0; k < body.size(); ++k) sol.components(static_cast<Int>(k)) = body[k];
    return sol;
}

}  // namespace

SolutionFile parse_solution(std::istream& is) { return parse_stream(is, false); }

SolutionFile parse_solution_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return parse_stream(is, false);
}

SolutionFile import_solution(std::istream& is) { return parse_stream(is, true); }

SolutionFile import_solution_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return parse_stream(is, true);
}

SolutionFile solution_from_candidate(const FiducialCandidate& c, const std::string& label,
                                     int digits) {
    SolutionFile sol;
    sol.dim = c.dim.d;
    sol.label = label;
    sol.digits = digits;
    sol.seed = c.seed;
    sol.symmetry = "none";
    if (c.subspace_tag) {
        const std::string& tag = *c.subspace_tag;
        auto colon = tag.find(':');
        sol.symmetry = tag.substr(0, colon);
        if (colon != std::string::npos) {
            std::string rest = tag.substr(colon + 1);
            if (rest.rfind("m=", 0) == 0) sol.eigenvalue = rest.substr(2);
        }
    }
    sol.components = c.components;
    return sol;
}

}  // namespace sic
