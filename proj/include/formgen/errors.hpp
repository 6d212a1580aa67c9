#pragma once

#include "formgen/token.hpp"

#include <stdexcept>
#include <string>

namespace formgen {

/// Pipeline stage a failure belongs to. Drives the diagnostic prefix and
/// the process exit code (lexical=1, syntax=2, binding=3, io=4).
enum class Stage {
    lexical,
    syntax,
    binding,
    io,
};

const char* stage_name(Stage stage);
int exit_code_for(Stage stage);

class CompileError : public std::runtime_error {
public:
    CompileError(Stage stage, std::string message, int line, int column)
        : std::runtime_error(message), stage_(stage), line_(line), column_(column) {}

    Stage stage() const { return stage_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Stage stage_;
    int line_;
    int column_;
};

class LexicalError : public CompileError {
public:
    LexicalError(std::string message, int line, int column)
        : CompileError(Stage::lexical, std::move(message), line, column) {}
};

class SyntaxError : public CompileError {
public:
    SyntaxError(std::string message, std::string expected, Token found)
        : CompileError(Stage::syntax, std::move(message), found.line, found.column),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    const std::string& expected() const { return expected_; }
    const Token& found() const { return found_; }

private:
    std::string expected_;
    Token found_;
};

/// Violations of the dialect's intrinsic validity rules (facet applicability,
/// facet value shapes, occurrence bounds). Reported with exit code 3.
class SemanticError : public CompileError {
public:
    SemanticError(std::string message, int line, int column)
        : CompileError(Stage::binding, std::move(message), line, column) {}
};

class BindingError : public CompileError {
public:
    BindingError(std::string message, int line, int column)
        : CompileError(Stage::binding, std::move(message), line, column) {}
};

class IoError : public CompileError {
public:
    explicit IoError(std::string message)
        : CompileError(Stage::io, std::move(message), 0, 0) {}
};

} // namespace formgen
