#pragma once

#include <string>

namespace qgdef::cli {

struct RunConfig {
    std::string command;
    std::string algebra = "sl2";
    int order = 0;
    int degree_cap = 0; // 0 selects 3N
    bool even = false;
    std::string theta = "auto"; // on | off | auto
    std::string pivot = "lexicographic";
    std::string out;
    std::string from_f;
    std::string phi;
    std::string t = "casimir";
    std::string certificate;
    int max_arity = 4;
    int verbosity = 0;
};

int cmd_associator(const RunConfig& c);
int cmd_twist(const RunConfig& c);
int cmd_qt(const RunConfig& c);
int cmd_verify(const RunConfig& c);
int cmd_cohomology(const RunConfig& c);

} // namespace qgdef::cli
