#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segrelab/family.hpp"
#include "segrelab/intdep.hpp"

namespace segrelab {

// Diagnostic with a 1-based source position.
struct SessionError : std::runtime_error {
    int line = 0;
    int col = 0;
    SessionError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

// A polynomial or scalar kept as source text until the run config fixes the
// field.
struct SrcExpr {
    std::string text;
    int line = 0;
    int col = 0;
};

struct RingDecl {
    std::string name;
    bool field_given = false;
    Field field;
    std::vector<std::string> params;
    std::vector<std::vector<std::string>> blocks;  // coordinate variables, one list per grading block
    std::vector<SrcExpr> modulus;
};

struct IdealDecl {
    std::string name;
    std::string ring;
    std::vector<SrcExpr> gens;
};

struct MapDecl {
    std::string name;
    std::string ring;
    std::vector<SrcExpr> forms;
};

struct FamilyDecl {
    std::string name;
    std::string payload;  // an ideal or map name
    std::vector<std::vector<SrcExpr>> points;
};

struct Command {
    std::string verb;
    std::vector<std::string> args;
    std::string kind;  // scan/report invariant name
    NVec n;            // mixedmult/multideg argument
    int line = 0;
    int col = 0;
};

struct Session {
    struct Item {
        enum class K { Ring, Ideal, Map, Family, Cmd };
        K k;
        std::size_t idx;
    };
    std::vector<RingDecl> rings;
    std::vector<IdealDecl> ideals;
    std::vector<MapDecl> maps;
    std::vector<FamilyDecl> families;
    std::vector<Command> commands;
    std::vector<Item> order;
};

// Grammar-checked and name-resolved; every error carries line:col and what
// was expected.
Session parse_session(const std::string& text);

struct RunConfig {
    bool field_overridden = false;
    Field field = Field::prime(2147483647);
    std::uint64_t seed = 0;
    int retries = 2;
    long long coeff_bound = 1000;
    int hs_window = 3;
    int hs_cap = 60;
    int trials = 5;
};

struct RunOutcome {
    std::string json;   // array with one object per command
    std::string table;  // human-readable rendering of the same data
    bool any_failed = false;
};

// Executes the commands in order; deterministic given (session, field, seed).
RunOutcome run_session(const Session& s, const RunConfig& cfg);

}  // namespace segrelab
