#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braid/chains.hpp"
#include "braid/gates.hpp"
#include "braid/state.hpp"

namespace braid::dsl {

struct SourcePos {
    int line = 0; // 1-based
    int col = 0;  // 1-based
};

struct SyntaxError : Error {
    SyntaxError(SourcePos pos, const std::string& expected)
        : Error("syntax error at " + std::to_string(pos.line) + ":" + std::to_string(pos.col) +
                ": expected " + expected),
          pos(pos), expected(expected) {}
    SourcePos pos;
    std::string expected;
};

struct SemanticError : Error {
    SemanticError(SourcePos pos, const std::string& what)
        : Error("semantic error at " + std::to_string(pos.line) + ":" + std::to_string(pos.col) +
                ": " + what),
          pos(pos) {}
    SourcePos pos;
};

struct RuntimeStmtError : Error {
    RuntimeStmtError(std::size_t statement_index, const std::string& what)
        : Error("runtime error at statement " + std::to_string(statement_index + 1) + ": " + what),
          statement_index(statement_index) {}
    std::size_t statement_index;
};

struct InitStmt {
    std::vector<int> digits;
};

struct GateStmt {
    int q = 0;
    int l = 1;
    std::size_t k = 1;
    double a2 = 0.5;
    double phi = 0.0;
    int b_sign = +1;
    std::vector<Involution> lambdas; // resolved at parse; defaults to all-identity
};

struct GhzStmt {
    int l = 1;
    std::size_t k = 1;
    std::vector<int> b_signs; // empty means all +1
};

struct ConnectStmt {
    std::vector<int> digits;
    std::string path;
};

struct DumpStmt {
    enum class Format { json, csv };
    Format format = Format::json;
    std::string path; // empty: dump to stdout
};

struct Statement {
    std::variant<InitStmt, GateStmt, GhzStmt, ConnectStmt, DumpStmt> node;
    SourcePos pos;
};

struct CircuitProgram {
    std::size_t D = 2;
    std::size_t n = 1;
    std::vector<Statement> statements;
};

/// Parse a `.braid` program. Total: every failure is a typed SyntaxError
/// or SemanticError carrying a source position; no input crashes.
CircuitProgram parse_program(std::string_view text);

/// Canonical text form; reparses to a structurally identical program.
std::string pretty_print(const CircuitProgram& prog);

struct DumpArtifact {
    DumpStmt::Format format = DumpStmt::Format::json;
    std::string path; // empty: meant for stdout
    std::string content;
};

struct RunResult {
    QuditRegisterState final_state;
    std::vector<double> step_norms; // norm after each statement
    std::vector<DumpArtifact> dumps;
};

/// Execute a parsed program. Relative `connect ... from` paths are
/// resolved against base_dir. Runtime failures carry the statement index.
RunResult execute_program(const CircuitProgram& prog, const std::string& base_dir = "");

} // namespace braid::dsl
